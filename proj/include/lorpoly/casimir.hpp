#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "lorpoly/errors.hpp"
#include "lorpoly/fock.hpp"
#include "lorpoly/spinor.hpp"

namespace lorpoly {

// Eigenvector candidate of the squeezing operator on the m-diagonal
// subspace span{|n+2m, n>}, coefficients alpha_0..alpha_{n_max} with
// alpha_0 = 1.
struct CasimirEigenvector {
    double s = 0.0;
    double m = 0.0;
    std::vector<cplx> coeffs;
};

namespace detail {

inline int two_m_of(double m) {
    const double two_m = 2.0 * m;
    const double rounded = std::round(two_m);
    if (std::abs(two_m - rounded) > 1e-9) {
        throw error("casimir_recursion: m must be a half-integer");
    }
    return static_cast<int>(rounded);
}

}  // namespace detail

// Three-term recursion for the squeezing eigenvalue problem:
// 2is alpha_n = alpha_{n+1} sqrt((n+1)(n+2m+1)) - alpha_{n-1} sqrt(n(n+2m)).
inline CasimirEigenvector casimir_recursion(double s, double m, int n_max) {
    if (m < 0.0) throw negative_m("casimir_recursion: m must be non-negative");
    if (n_max < 1) throw cutoff_too_small("casimir_recursion: n_max must be at least 1");
    const int mu = detail::two_m_of(m);
    CasimirEigenvector v{s, m, std::vector<cplx>(n_max + 1)};
    const cplx two_is{0.0, 2.0 * s};
    v.coeffs[0] = cplx{1.0, 0.0};
    v.coeffs[1] = two_is / std::sqrt(double(mu) + 1.0);
    for (int n = 1; n < n_max; ++n) {
        const double up = std::sqrt(double(n + 1) * double(n + mu + 1));
        const double down = std::sqrt(double(n) * double(n + mu));
        v.coeffs[n + 1] = (two_is * v.coeffs[n] + down * v.coeffs[n - 1]) / up;
    }
    return v;
}

// Action of the squeezing operator restricted to the m-sector, where it is
// tridiagonal: (T x)_n = (i/2)[sqrt(n(n+2m)) x_{n-1} - sqrt((n+1)(n+2m+1)) x_{n+1}].
inline std::vector<cplx> ecal_m_sector_apply(double m, const std::vector<cplx>& x) {
    const int mu = detail::two_m_of(m);
    const int len = static_cast<int>(x.size());
    std::vector<cplx> out(len, cplx{0.0, 0.0});
    const cplx ih{0.0, 0.5};
    for (int n = 0; n < len; ++n) {
        cplx acc{0.0, 0.0};
        if (n > 0) acc += std::sqrt(double(n) * double(n + mu)) * x[n - 1];
        if (n + 1 < len) acc -= std::sqrt(double(n + 1) * double(n + mu + 1)) * x[n + 1];
        out[n] = ih * acc;
    }
    return out;
}

struct AsymptoticFit {
    double exponent = 0.0;
    double phase_rate = 0.0;
};

// Large-n fit of alpha_n ~ n^{is - 1/2}. The recursion carries the two
// branches n^{is-1/2} and (-1)^n n^{-is-1/2} with equal weight, so the raw
// sequence has no power-law fit; summing consecutive pairs cancels the
// alternating branch to O(1/n). Slope from least squares of ln|h| vs ln n
// over the top decade, phase rate from the mean discrete derivative of
// Arg h over the same window.
inline AsymptoticFit asymptotic_check(const CasimirEigenvector& v) {
    const int n_max = static_cast<int>(v.coeffs.size()) - 1;
    if (n_max < 200) throw cutoff_too_small("asymptotic_check: need n_max >= 200");
    std::vector<double> ln_n, ln_h;
    std::vector<cplx> h;
    for (int n = 0; n + 1 <= n_max; n += 2) {
        const cplx hk = v.coeffs[n] + v.coeffs[n + 1];
        if (n >= n_max / 10 && std::abs(hk) > 0.0) {
            ln_n.push_back(std::log(double(n)));
            ln_h.push_back(std::log(std::abs(hk)));
            h.push_back(hk);
        }
    }
    const int count = static_cast<int>(ln_n.size());
    if (count < 8) throw cutoff_too_small("asymptotic_check: too few usable points");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int k = 0; k < count; ++k) {
        sx += ln_n[k];
        sy += ln_h[k];
        sxx += ln_n[k] * ln_n[k];
        sxy += ln_n[k] * ln_h[k];
    }
    AsymptoticFit fit;
    fit.exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);

    double rate_sum = 0.0;
    int rate_count = 0;
    for (int k = 0; k + 1 < count; ++k) {
        const double dln = ln_n[k + 1] - ln_n[k];
        if (dln <= 0.0) continue;
        rate_sum += std::arg(h[k + 1] / h[k]) / dln;
        ++rate_count;
    }
    fit.phase_rate = rate_count > 0 ? rate_sum / rate_count : 0.0;
    return fit;
}

// Embeds the m-sector coefficients into the two-mode basis at the target
// cutoff, slots |n+2m, n>.
inline Eigen::VectorXcd embed_eigenvector(const CasimirEigenvector& v, const FockBasis& basis) {
    const int mu = detail::two_m_of(v.m);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(basis.dim);
    for (int n = 0; n < static_cast<int>(v.coeffs.size()); ++n) {
        if (n + mu > basis.n_max || n > basis.n_max) break;
        out(static_cast<long>(n + mu) * basis.stride(0) + n) = v.coeffs[n];
    }
    return out;
}

// Applies the Casimir-shift operator K3 + E. On an eigenvector candidate
// with Ecal x = s x, the output satisfies Ecal out = (s + i) out away from
// the cutoff boundary, realizing the imaginary shift of the eigenvalue.
inline Eigen::VectorXcd area_shift_apply(const SU11Ops& ops, const Eigen::VectorXcd& state) {
    if (state.size() != ops.basis.dim) {
        throw dimension_mismatch("area_shift_apply: state size differs from basis dimension");
    }
    return SparseOp(ops.k3 + ops.e_dil) * state;
}

}  // namespace lorpoly
