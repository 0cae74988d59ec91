#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "lorpoly/errors.hpp"
#include "lorpoly/spinor.hpp"
#include "lorpoly/su11.hpp"

namespace lorpoly {

// N faces, one spinor pair per face.
using Configuration = std::vector<SpinorPair>;

inline std::vector<UTPair> ut_config(const Configuration& c) {
    std::vector<UTPair> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = ut_from_zw(c[i]);
    return out;
}

inline Configuration zw_config(const std::vector<UTPair>& uts) {
    Configuration out(uts.size());
    for (std::size_t i = 0; i < uts.size(); ++i) out[i] = zw_from_ut(uts[i]);
    return out;
}

inline double scale_of(const Configuration& c) {
    double s = 0.0;
    for (const auto& p : c) s += std::norm(p.z) + std::norm(p.w);
    return std::max(1.0, s);
}

inline double total_area(const Configuration& c) {
    double e = 0.0;
    for (const auto& p : c) e += su11_from_zw(p).ecal;
    return e;
}

// Closure constraint data: the summed 3-vector and the max-abs of the two
// holomorphic constraint sums (sum u t, Re sum ubar t). Both vanish iff the
// configuration is closed.
struct ClosureResidual {
    MinkVector3 vec{0.0, 0.0, 0.0};
    double scalar = 0.0;

    double norm() const { return std::max(std::sqrt(vec.euclid2()), scalar); }
};

inline ClosureResidual closure_residual(const Configuration& c) {
    cplx sum_ut{0.0, 0.0};
    cplx sum_ubar_t{0.0, 0.0};
    MinkVector3 vsum{0.0, 0.0, 0.0};
    for (const auto& p : c) {
        const UTPair q = ut_from_zw(p);
        sum_ut += q.u * q.t;
        sum_ubar_t += std::conj(q.u) * q.t;
        const SU11Data d = su11_from_zw(p);
        vsum = vsum + d.vec();
    }
    return {vsum, std::max(std::abs(sum_ut), std::abs(sum_ubar_t.real()))};
}

inline bool is_closed(const Configuration& c, double rel_tol = 1e-9) {
    return closure_residual(c).norm() < rel_tol * scale_of(c);
}

// SU(1,1)-invariant quadratics. alpha_z and alpha_w are real antisymmetric,
// beta is real with beta_ii = 2 Ecal_i; theta is the footnote companion
// theta_ij = 2(ubar_i t_j + u_i tbar_j).
struct InvariantObservables {
    Eigen::MatrixXd alpha_z;
    Eigen::MatrixXd alpha_w;
    Eigen::MatrixXd beta;
    Eigen::MatrixXd theta;

    Eigen::MatrixXd alpha_plus() const { return alpha_z + alpha_w; }
    Eigen::MatrixXd alpha_minus() const { return alpha_z - alpha_w; }
    Eigen::MatrixXd beta_sym() const { return beta + beta.transpose(); }
    Eigen::MatrixXd beta_anti() const { return beta - beta.transpose(); }
};

inline InvariantObservables invariant_observables(const Configuration& c) {
    const int n = static_cast<int>(c.size());
    InvariantObservables obs{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n),
                             Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    const std::vector<UTPair> uts = ut_config(c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            obs.alpha_z(i, j) = -2.0 * std::imag(std::conj(c[i].z) * c[j].z);
            obs.alpha_w(i, j) = -2.0 * std::imag(std::conj(c[i].w) * c[j].w);
            obs.beta(i, j) = -2.0 * std::imag(std::conj(c[i].z) * std::conj(c[j].w));
            obs.theta(i, j) = 4.0 * std::real(std::conj(uts[i].u) * uts[j].t);
        }
    }
    return obs;
}

// Delta_ij = 2i(ubar_i t_j - u_i tbar_j); real, equal to alpha+ + betaS, and
// of rank 2 with Delta^2 = 2 Ecal Delta on closed configurations.
inline Eigen::MatrixXd delta_matrix(const Configuration& c) {
    const int n = static_cast<int>(c.size());
    const std::vector<UTPair> uts = ut_config(c);
    Eigen::MatrixXd delta(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            delta(i, j) = -4.0 * std::imag(std::conj(uts[i].u) * uts[j].t);
        }
    }
    return delta;
}

// Reference point of each orbit: two back-to-back faces carrying the whole
// area, the rest zero. For area < 0 the pattern is conjugated so that the
// total stays equal to the requested area.
inline Configuration squashed(int n, double area) {
    if (n < 2) throw bad_size("squashed: need at least two faces");
    if (area == 0.0) throw zero_area("squashed: area must be nonzero");
    const double s = std::sqrt(std::abs(area) / 2.0);
    const cplx iu = area > 0.0 ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
    UTPair first{cplx{s, 0.0}, area > 0.0 ? cplx{0.0, -s} : cplx{0.0, s}};
    std::vector<UTPair> uts(n, UTPair{cplx{0.0, 0.0}, cplx{0.0, 0.0}});
    uts[0] = first;
    uts[1] = {iu * first.u, iu * first.t};
    return zw_config(uts);
}

inline Configuration act_global(const SU11Element& g, const Configuration& c) {
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = act_on_spinor(g, c[i]);
    return out;
}

inline Configuration conj_configuration(const Configuration& c) {
    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = {std::conj(c[i].z), std::conj(c[i].w)};
    }
    return out;
}

}  // namespace lorpoly
