#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "lorpoly/errors.hpp"
#include "lorpoly/polyhedron.hpp"
#include "lorpoly/spinor.hpp"
#include "lorpoly/su11.hpp"

namespace lorpoly {

// Deformation element: m acts on the t vector, mtilde = transpose-inverse
// acts on the u vector, so that sum u_i t_i is preserved.
struct GLElement {
    Eigen::MatrixXd m;
    Eigen::MatrixXd mtilde;

    int size() const { return static_cast<int>(m.rows()); }

    double pairing_defect() const {
        const int n = size();
        return (mtilde.transpose() * m - Eigen::MatrixXd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    }

    double cond() const {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto& sv = svd.singularValues();
        return sv(0) / sv(sv.size() - 1);
    }
};

inline GLElement make_gl(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("make_gl: matrix must be square");
    return {m, m.transpose().inverse()};
}

inline GLElement gl_identity(int n) {
    return {Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Identity(n, n)};
}

inline GLElement gl_compose(const GLElement& g2, const GLElement& g1) {
    if (g2.size() != g1.size()) throw dimension_mismatch("gl_compose: size mismatch");
    return {g2.m * g1.m, g2.mtilde * g1.mtilde};
}

inline Configuration gl_apply(const GLElement& g, const Configuration& c) {
    const int n = static_cast<int>(c.size());
    if (g.size() != n) throw dimension_mismatch("gl_apply: element size differs from face count");
    const std::vector<UTPair> uts = ut_config(c);
    Eigen::VectorXcd u(n), t(n);
    for (int i = 0; i < n; ++i) {
        u(i) = uts[i].u;
        t(i) = uts[i].t;
    }
    const Eigen::VectorXcd u2 = g.mtilde.cast<cplx>() * u;
    const Eigen::VectorXcd t2 = g.m.cast<cplx>() * t;
    std::vector<UTPair> out(n);
    for (int i = 0; i < n; ++i) out[i] = {u2(i), t2(i)};
    return zw_config(out);
}

// Same transformation written on (z, wbar): a Bogoliubov rotation with
// mixing block (m - mtilde)/2. Kept as an independent code path so the two
// routes can cross-check each other.
inline Configuration bogoliubov_zw(const GLElement& g, const Configuration& c) {
    const int n = static_cast<int>(c.size());
    if (g.size() != n) {
        throw dimension_mismatch("bogoliubov_zw: element size differs from face count");
    }
    const Eigen::MatrixXcd p = ((g.m + g.mtilde) / 2.0).cast<cplx>();
    const Eigen::MatrixXcd q = ((g.m - g.mtilde) / 2.0).cast<cplx>();
    Eigen::VectorXcd z(n), wbar(n);
    for (int i = 0; i < n; ++i) {
        z(i) = c[i].z;
        wbar(i) = std::conj(c[i].w);
    }
    const Eigen::VectorXcd z2 = p * z + q * wbar;
    const Eigen::VectorXcd wbar2 = p * wbar + q * z;
    Configuration out(n);
    for (int i = 0; i < n; ++i) out[i] = {z2(i), std::conj(wbar2(i))};
    return out;
}

namespace detail {

// Orthonormal basis of the orthogonal complement of span{c, d}, as the
// trailing columns of the returned matrix. Pivoted modified Gram-Schmidt
// over the coordinate axes, ties resolved toward the lowest index so the
// squashed configuration completes to the identity.
inline Eigen::MatrixXd complement_basis(const Eigen::VectorXd& c, const Eigen::VectorXd& d) {
    const int n = static_cast<int>(c.size());
    Eigen::MatrixXd basis(n, n - 2);
    Eigen::VectorXd g1 = c.normalized();
    Eigen::VectorXd g2 = d - d.dot(g1) * g1;
    g2.normalize();
    std::vector<Eigen::VectorXd> cand(n);
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, k);
        v -= v.dot(g1) * g1;
        v -= v.dot(g2) * g2;
        cand[k] = v;
    }
    std::vector<bool> used(n, false);
    for (int col = 0; col < n - 2; ++col) {
        int best = -1;
        double best_norm = -1.0;
        for (int k = 0; k < n; ++k) {
            if (used[k]) continue;
            const double nk = cand[k].norm();
            if (nk > best_norm + 1e-12) {
                best_norm = nk;
                best = k;
            }
        }
        used[best] = true;
        Eigen::VectorXd v = cand[best].normalized();
        basis.col(col) = v;
        for (int k = 0; k < n; ++k) {
            if (!used[k]) cand[k] -= cand[k].dot(v) * v;
        }
    }
    return basis;
}

}  // namespace detail

// Inverse direction of the orbit map: extracts the element whose action on
// the squashed reference reproduces c. Columns 1,2 of mtilde are A,B from
// u_i = sqrt(E/2)(A_i + i B_i); the rest complete the orthogonal complement
// of span{C, D} taken from t_i = sqrt(E/2)(C_i - i D_i); m is the
// transpose-inverse, which puts D and C in its first two columns. Negative
// total area is handled by conjugation symmetry.
inline GLElement decompose(const Configuration& c) {
    const int n = static_cast<int>(c.size());
    if (n < 2) throw bad_size("decompose: need at least two faces");
    const double scale = scale_of(c);
    if (closure_residual(c).norm() >= 1e-9 * scale) {
        throw not_closed("decompose: configuration is not closed");
    }
    const double e = total_area(c);
    if (std::abs(e) <= 1e-12 * scale) {
        throw zero_total_area("decompose: total area vanishes");
    }
    if (e < 0.0) return decompose(conj_configuration(c));

    const double s = std::sqrt(e / 2.0);
    const std::vector<UTPair> uts = ut_config(c);
    Eigen::VectorXd a(n), b(n), cc(n), d(n);
    for (int i = 0; i < n; ++i) {
        a(i) = uts[i].u.real() / s;
        b(i) = uts[i].u.imag() / s;
        cc(i) = uts[i].t.real() / s;
        d(i) = -uts[i].t.imag() / s;
    }
    Eigen::MatrixXd mtilde(n, n);
    mtilde.col(0) = a;
    mtilde.col(1) = b;
    if (n > 2) mtilde.rightCols(n - 2) = detail::complement_basis(cc, d);
    return {mtilde.transpose().inverse(), mtilde};
}

struct CloseResult {
    double tau = 0.0;
    SU11Element lambda_g;
    Configuration closed;
};

namespace detail {

// The unique positive-Hermitian (pure boost) element G with G H Gdag =
// sqrt(det H) Id, for H positive definite Hermitian with equal diagonal.
inline SU11Element boost_to_rest(double p, cplx q, double det) {
    const double rd = std::sqrt(det);
    const double pn = p / rd;
    const cplx qn = q / rd;
    const double den = std::sqrt(2.0 * pn + 2.0);
    const SU11Element sqrt_h{cplx{(pn + 1.0) / den, 0.0}, qn / den};
    return sqrt_h.inverse();
}

}  // namespace detail

// Deforms an arbitrary configuration into a closed one: a rescaling by tau
// equalizes the determinants of the two null-sum matrices, then a boost
// acting on the w sector only aligns them. The z sector is left untouched
// apart from the rescaling.
inline CloseResult close_configuration(const Configuration& c) {
    double pz = 0.0, pw = 0.0;
    cplx qz{0.0, 0.0}, qw{0.0, 0.0};
    for (const auto& pr : c) {
        pz += std::norm(pr.z);
        qz += pr.z * pr.z;
        pw += std::norm(pr.w);
        qw += std::conj(pr.w) * std::conj(pr.w);
    }
    const double det_z = pz * pz - std::norm(qz);
    const double det_w = pw * pw - std::norm(qw);
    if (det_z <= 1e-12 * std::max(1.0, pz * pz) || det_w <= 1e-12 * std::max(1.0, pw * pw)) {
        throw degenerate_null_sum("close_configuration: null sum is not strictly time-like");
    }
    const double tau = 0.25 * std::log(det_w / det_z);
    const double ez = std::exp(tau / 2.0);
    const double ew = std::exp(-tau / 2.0);

    // Rescaling is quadratic in the variables, so the null-sum matrices
    // scale by e^{+-tau} and their determinants meet at the geometric mean.
    const SU11Element gz = detail::boost_to_rest(ez * ez * pz, ez * ez * qz, det_z * ez * ez * ez * ez);
    const SU11Element gw = detail::boost_to_rest(ew * ew * pw, ew * ew * qw, det_w * ew * ew * ew * ew);
    const SU11Element lambda = gz.inverse().times(gw);

    Configuration out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const cplx z = ez * c[i].z;
        const cplx w = ew * c[i].w;
        out[i] = {z, std::conj(lambda.a) * w + std::conj(lambda.b) * std::conj(w)};
    }
    return {tau, lambda, out};
}

// Deterministic standard normal stream: 64-bit Mersenne Twister plus
// Box-Muller with a cached spare. Hand-rolled because the distribution
// classes of the standard library are not byte-stable across
// implementations.
struct gaussian_stream {
    std::mt19937_64 rng;
    bool has_spare = false;
    double spare = 0.0;

    explicit gaussian_stream(std::uint64_t seed) : rng(seed) {}

    double operator()() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
        const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * std::numbers::pi_v<double> * u2;
        spare = r * std::sin(ang);
        has_spare = true;
        return r * std::cos(ang);
    }
};

// Random deformation element with i.i.d. standard Gaussian entries,
// redrawn while the condition number exceeds 1e6.
inline GLElement sample_gl(int n, std::uint64_t seed) {
    gaussian_stream g(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = g();
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > 0.0 && sv(0) / sv(sv.size() - 1) <= 1e6) return make_gl(m);
    }
    throw error("sample_gl: could not draw a well-conditioned matrix");
}

inline Configuration sample_polyhedron(int n, double area, std::uint64_t seed) {
    if (n < 2) throw bad_size("sample_polyhedron: need at least two faces");
    if (area == 0.0) throw zero_area("sample_polyhedron: area must be nonzero");
    return gl_apply(sample_gl(n, seed), squashed(n, area));
}

// Rank of the linearized orbit map at the squashed reference: the columns
// are d(u,t)/dX over the N^2 matrix directions, delta t = X t0 and
// delta u = -X^T u0. Expected rank is 4N-4, the stabilizer being the
// lower-right gl(N-2) block.
inline int orbit_dimension(int n, double area) {
    const std::vector<UTPair> uts = ut_config(squashed(n, area));
    Eigen::VectorXcd u0(n), t0(n);
    for (int i = 0; i < n; ++i) {
        u0(i) = uts[i].u;
        t0(i) = uts[i].t;
    }
    Eigen::MatrixXd jac(4 * n, n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Eigen::VectorXcd du = Eigen::VectorXcd::Zero(n);
            Eigen::VectorXcd dt = Eigen::VectorXcd::Zero(n);
            du(b) = -u0(a);
            dt(a) = t0(b);
            const int col = a * n + b;
            jac.block(0, col, n, 1) = du.real();
            jac.block(n, col, n, 1) = du.imag();
            jac.block(2 * n, col, n, 1) = dt.real();
            jac.block(3 * n, col, n, 1) = dt.imag();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k) {
        if (sv(k) > 1e-8 * sv(0)) ++rank;
    }
    return rank;
}

}  // namespace lorpoly
