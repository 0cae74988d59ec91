#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>

#include "lorpoly/gl_action.hpp"
#include "lorpoly/polyhedron.hpp"

using namespace lorpoly;

namespace {

Configuration random_closed(int n, double area, std::uint64_t seed) {
    return sample_polyhedron(n, area, seed);
}

}  // namespace

TEST_CASE("squashed reference configuration") {
    const Configuration c = squashed(2, 2.0);
    const SU11Data d1 = su11_from_zw(c[0]);
    const SU11Data d2 = su11_from_zw(c[1]);
    // both faces carry half the area, normals back to back along k2
    REQUIRE(std::abs(d1.ecal - 1.0) < 1e-15);
    REQUIRE(std::abs(d2.ecal - 1.0) < 1e-15);
    REQUIRE(std::abs(d1.j3) < 1e-15);
    REQUIRE(std::abs(d1.k1) < 1e-15);
    REQUIRE(std::abs(d1.k2 - 1.0) < 1e-15);
    REQUIRE(std::abs(d2.j3) < 1e-15);
    REQUIRE(std::abs(d2.k1) < 1e-15);
    REQUIRE(std::abs(d2.k2 + 1.0) < 1e-15);

    const Configuration c5 = squashed(5, 3.0);
    REQUIRE(std::abs(total_area(c5) - 3.0) < 1e-14);
    REQUIRE(closure_residual(c5).norm() < 1e-14);
    for (int k = 2; k < 5; ++k) {
        REQUIRE(c5[k].z == cplx{0.0, 0.0});
        REQUIRE(c5[k].w == cplx{0.0, 0.0});
    }

    REQUIRE_THROWS_AS(squashed(1, 1.0), bad_size);
    REQUIRE_THROWS_AS(squashed(3, 0.0), zero_area);
}

TEST_CASE("negative-area reference is the conjugate configuration") {
    const Configuration plus = squashed(4, 2.5);
    const Configuration minus = squashed(4, -2.5);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(minus[i].z == std::conj(plus[i].z));
        REQUIRE(minus[i].w == std::conj(plus[i].w));
    }
    REQUIRE(std::abs(total_area(minus) + 2.5) < 1e-14);
}

TEST_CASE("closure residual of an open configuration") {
    const Configuration c{{{1.0, 0.0}, {0.0, 1.0}}};
    REQUIRE(closure_residual(c).norm() == Catch::Approx(1.0).margin(1e-15));
    REQUIRE_FALSE(is_closed(c));
    REQUIRE(is_closed(squashed(3, 2.0)));
}

TEST_CASE("closure is equivalent to the two spinor sums vanishing") {
    // on a closed configuration sum ubar_i t_i = -i Ecal
    const Configuration c = random_closed(5, 2.0, 31);
    cplx sum_ut{0.0, 0.0}, sum_ubar_t{0.0, 0.0};
    for (const UTPair& q : ut_config(c)) {
        sum_ut += q.u * q.t;
        sum_ubar_t += std::conj(q.u) * q.t;
    }
    const double tol = 1e-11 * scale_of(c);
    REQUIRE(std::abs(sum_ut) < tol);
    REQUIRE(std::abs(sum_ubar_t - cplx{0.0, -total_area(c)}) < tol);
}

TEST_CASE("invariant matrices on the squashed configuration") {
    const Configuration c = squashed(3, 2.0);
    const Eigen::MatrixXd delta = delta_matrix(c);
    // both live faces carry ubar t = -i E/2, so the diagonal sits at 2E
    REQUIRE(std::abs(delta(0, 0) - 4.0) < 1e-14);
    REQUIRE(std::abs(delta(1, 1) - 4.0) < 1e-14);
    REQUIRE(std::abs(delta(2, 2)) < 1e-14);
    REQUIRE(std::abs(delta(0, 1)) < 1e-14);
    REQUIRE(std::abs(delta.trace() - 4.0 * total_area(c)) < 1e-13);

    const InvariantObservables obs = invariant_observables(c);
    REQUIRE((delta - obs.alpha_plus() - obs.beta_sym()).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(std::abs(obs.beta(0, 0) - 2.0) < 1e-14);
    REQUIRE(std::abs(obs.beta(2, 2)) < 1e-14);
}

TEST_CASE("Delta identities on random closed configurations") {
    for (int n : {2, 4, 7}) {
        const Configuration c = random_closed(n, 2.5, 100 + n);
        const double e = total_area(c);
        const Eigen::MatrixXd delta = delta_matrix(c);
        const double tol = 1e-10 * std::max(1.0, e * e);

        REQUIRE(std::abs(delta.trace() - 4.0 * e) < tol);
        REQUIRE((delta * delta - 2.0 * e * delta).cwiseAbs().maxCoeff() < tol);

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(delta);
        int rank = 0;
        for (int k = 0; k < svd.singularValues().size(); ++k) {
            if (svd.singularValues()(k) > 1e-8 * svd.singularValues()(0)) ++rank;
        }
        REQUIRE(rank == 2);

        // companion matrix: traceless, swapped by Delta, squares to -2E Delta
        const InvariantObservables obs = invariant_observables(c);
        const Eigen::MatrixXd theta = obs.theta;
        REQUIRE(std::abs(theta.trace()) < tol);
        REQUIRE((delta * theta - 2.0 * e * theta).cwiseAbs().maxCoeff() < tol);
        REQUIRE((theta * delta - 2.0 * e * theta).cwiseAbs().maxCoeff() < tol);
        REQUIRE((theta * theta + 2.0 * e * delta).cwiseAbs().maxCoeff() < tol);

        // Delta = alpha+ + betaS also away from the reference point
        REQUIRE((delta - obs.alpha_plus() - obs.beta_sym()).cwiseAbs().maxCoeff() <
                1e-12 * scale_of(c));
    }
}

TEST_CASE("invariant matrices do not move under the global group action") {
    gaussian_stream g(33);
    const Configuration c = random_closed(4, 2.0, 34);
    const SU11Element el = su11_exp(g(), g(), g());
    const Configuration c2 = act_global(el, c);
    const InvariantObservables before = invariant_observables(c);
    const InvariantObservables after = invariant_observables(c2);
    const double tol = 1e-11 * scale_of(c2) * scale_of(c2);
    REQUIRE((before.alpha_z - after.alpha_z).cwiseAbs().maxCoeff() < tol);
    REQUIRE((before.alpha_w - after.alpha_w).cwiseAbs().maxCoeff() < tol);
    REQUIRE((before.beta - after.beta).cwiseAbs().maxCoeff() < tol);
    // theta is not a group scalar, but Delta = alpha+ + betaS is
    REQUIRE((delta_matrix(c) - delta_matrix(c2)).cwiseAbs().maxCoeff() < tol);
    REQUIRE(std::abs(total_area(c2) - total_area(c)) < tol);
    REQUIRE(is_closed(c2));
}
