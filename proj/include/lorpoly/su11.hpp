#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "lorpoly/spinor.hpp"

namespace lorpoly {

// Element of SU(1,1) stored through its defining matrix [[a, b], [bbar, abar]]
// with |a|^2 - |b|^2 = 1. Group elements act on (z, zbar) column vectors.
struct SU11Element {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};

    Eigen::Matrix2cd matrix() const {
        Eigen::Matrix2cd m;
        m << a, b, std::conj(b), std::conj(a);
        return m;
    }

    double unit_defect() const { return std::abs(std::norm(a) - std::norm(b) - 1.0); }

    SU11Element inverse() const { return {std::conj(a), -b}; }

    // Matrix product: g2.times(g1) applies g1 first.
    SU11Element times(const SU11Element& g1) const {
        return {a * g1.a + b * std::conj(g1.b), a * g1.b + b * std::conj(g1.a)};
    }
};

// exp((i/2)(eta3 tau3 - eta1 tau1 - eta2 tau2)) with eta = (eta1, eta2, eta3).
// The generator squares to -(eta3^2 - eta1^2 - eta2^2)/4 times the identity,
// so the exponential closes in cosh/cos form; a series handles |eta^2| < 1e-8.
inline SU11Element su11_exp(double eta1, double eta2, double eta3) {
    const double q = eta3 * eta3 - eta1 * eta1 - eta2 * eta2;  // Minkowski norm^2
    const double c = -0.25 * q;                                // X^2 = c * Id
    double C, S;
    if (std::abs(q) < 1e-8) {
        C = 0.0;
        S = 0.0;
        double term = 1.0;  // c^k / (2k)!
        for (int k = 0; k <= 7; ++k) {
            C += term;
            S += term / (2.0 * k + 1.0);
            term *= c / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        }
    } else if (c > 0.0) {
        const double r = std::sqrt(c);
        C = std::cosh(r);
        S = std::sinh(r) / r;
    } else {
        const double r = std::sqrt(-c);
        C = std::cos(r);
        S = std::sin(r) / r;
    }
    const cplx x00{0.0, 0.5 * eta3};
    const cplx x01{-0.5 * eta2, -0.5 * eta1};
    return {C + S * x00, S * x01};
}

inline SpinorPair act_on_spinor(const SU11Element& g, const SpinorPair& p) {
    SpinorPair out;
    out.z = g.a * p.z + g.b * std::conj(p.z);
    // the w-sector transforms with the components in reverse order:
    // (wbar, w) -> G (wbar, w)
    const cplx wbar = g.a * std::conj(p.w) + g.b * p.w;
    out.w = std::conj(wbar);
    return out;
}

inline UTPair act_on_ut(const SU11Element& g, const UTPair& q) {
    return {g.a * q.u + g.b * std::conj(q.u), g.a * q.t + g.b * std::conj(q.t)};
}

// The Hermitian matrix M = [[J3, K-], [K+, J3]]; det M = J3^2 - |K-|^2 is the
// signed squared norm of the face normal. Group action is M -> G M Gdag.
struct HermitianM {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();

    double j3() const { return m(0, 0).real(); }
    cplx kminus() const { return m(0, 1); }
    double det() const { return std::real(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)); }
};

inline HermitianM m_matrix(const SpinorPair& p) {
    const SU11Data d = su11_from_zw(p);
    HermitianM h;
    h.m << cplx{d.j3, 0.0}, d.kminus(), std::conj(d.kminus()), cplx{d.j3, 0.0};
    return h;
}

// Rank-one future/past split M = Mz - Mw with
// Mz = (z,zbar)(z,zbar)^dag / 2 and Mw = (wbar,w)(wbar,w)^dag / 2.
inline std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> null_split(const SpinorPair& p) {
    Eigen::Vector2cd vz, vw;
    vz << p.z, std::conj(p.z);
    vw << std::conj(p.w), p.w;
    return {0.5 * vz * vz.adjoint(), 0.5 * vw * vw.adjoint()};
}

}  // namespace lorpoly
