#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "lorpoly/errors.hpp"

namespace lorpoly {

using cplx = std::complex<double>;

// One face of a polyhedron: a pair of complex variables carrying the su(1,1)
// observables. Brackets: {z, zbar} = {w, wbar} = -i.
struct SpinorPair {
    cplx z{};
    cplx w{};
};

// Decoupled "position-like" variables u = (z - wbar)/sqrt(2),
// t = (z + wbar)/sqrt(2). They satisfy u t = K-, u tbar = J3 + i Ecal.
struct UTPair {
    cplx u{};
    cplx t{};
};

// A 3-vector in 2+1 Minkowski space, components (J3, K1, K2) with signature
// (+,-,-). Face normals are space-like or null: mink2() <= 0.
struct MinkVector3 {
    double j3 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;

    double mink2() const { return j3 * j3 - k1 * k1 - k2 * k2; }
    double euclid2() const { return j3 * j3 + k1 * k1 + k2 * k2; }

    MinkVector3 operator+(const MinkVector3& o) const { return {j3 + o.j3, k1 + o.k1, k2 + o.k2}; }
    MinkVector3 operator-(const MinkVector3& o) const { return {j3 - o.j3, k1 - o.k1, k2 - o.k2}; }
    MinkVector3 operator-() const { return {-j3, -k1, -k2}; }
};

// Full geometric datum of one face: space-like normal, boost parameter
// lambda = ln|u/t|, area-orientation sign eps = sign(Ecal) and the Z2 label
// sigma distinguishing (u,t) from (-u,-t).
struct GeomData {
    MinkVector3 vec{};
    double lambda = 0.0;
    int eps = +1;
    int sigma = +1;
};

// su(1,1) observables of one face plus the invariants they determine.
struct SU11Data {
    double j3 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double ecal = 0.0;     // Ecal = (i/2)(zbar wbar - z w), the squeezing generator
    double casimir = 0.0;  // J3^2 - K1^2 - K2^2 = -Ecal^2

    MinkVector3 vec() const { return {j3, k1, k2}; }
    cplx kminus() const { return {k1, -k2}; }
};

// All ten so(3,2) generators of one face, as three mutually orthogonal
// 3-vectors of equal norm E: J (rotations), K (boosts, the face normal
// sector), L (the remaining boosts, with L3 = Ecal), plus E itself.
struct SO32Data {
    double J[3] = {0, 0, 0};
    double K[3] = {0, 0, 0};
    double L[3] = {0, 0, 0};
    double E = 0.0;
};

inline double scale_of(const SpinorPair& p) {
    return std::max(1.0, std::norm(p.z) + std::norm(p.w));
}

inline double scale_of(const UTPair& q) {
    return std::max(1.0, std::norm(q.u) + std::norm(q.t));
}

// Principal argument remapped to [0, 2pi).
inline double arg_2pi(cplx x) {
    double a = std::arg(x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi) a = 0.0;
    return a;
}

inline SU11Data su11_from_zw(const SpinorPair& p) {
    SU11Data d;
    d.j3 = 0.5 * (std::norm(p.z) - std::norm(p.w));
    const cplx kp = 0.5 * (std::conj(p.z) * std::conj(p.z) - p.w * p.w);
    d.k1 = kp.real();
    d.k2 = kp.imag();  // K+ = K1 + i K2
    d.ecal = std::imag(p.z * p.w);
    d.casimir = d.j3 * d.j3 - d.k1 * d.k1 - d.k2 * d.k2;
    return d;
}

inline UTPair ut_from_zw(const SpinorPair& p) {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return {(p.z - std::conj(p.w)) * inv_sqrt2, (p.z + std::conj(p.w)) * inv_sqrt2};
}

inline SpinorPair zw_from_ut(const UTPair& q) {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return {(q.t + q.u) * inv_sqrt2, std::conj((q.t - q.u) * inv_sqrt2)};
}

// Same observables computed through the decoupled variables:
// J3 + i Ecal = u tbar and K- = u t.
inline SU11Data observables_from_ut(const UTPair& q) {
    SU11Data d;
    const cplx jt = q.u * std::conj(q.t);
    d.j3 = jt.real();
    d.ecal = jt.imag();
    const cplx km = q.u * q.t;
    d.k1 = km.real();
    d.k2 = -km.imag();  // K- = K1 - i K2
    d.casimir = d.j3 * d.j3 - d.k1 * d.k1 - d.k2 * d.k2;
    return d;
}

inline double lambda_from(const UTPair& q) {
    return 0.5 * (std::log(std::norm(q.u)) - std::log(std::norm(q.t)));
}

inline double lambda_from(const SpinorPair& p) {
    return lambda_from(ut_from_zw(p));
}

// Forward map of the face parametrization: (u,t) -> (vec, lambda, eps, sigma).
//
// sigma labels the two preimages (u,t) and (-u,-t) of the quadratic
// observables. With theta = Arg(u tbar), phi = Arg(u t) in [0, 2pi), the
// half-angle reconstruction u0 = |u| e^{i(phi+theta)/2} recovers u up to an
// overall sign; sigma is +1 exactly when u = +u0. In terms of the raw
// arguments this flips the naive sign(Arg(u) - Arg(t)) whenever
// Arg(u) + Arg(t) wraps past 2pi. A tie Arg(u) = Arg(t) resolves to +1.
inline GeomData geom_from_ut(const UTPair& q) {
    if (q.u == cplx{} || q.t == cplx{}) {
        throw degenerate_pair("geom_from_ut: u and t must both be nonzero");
    }
    GeomData g;
    const SU11Data d = observables_from_ut(q);
    g.vec = d.vec();
    g.lambda = lambda_from(q);

    const double scale = scale_of(q);
    const double norm_j = std::sqrt(std::max(0.0, d.k1 * d.k1 + d.k2 * d.k2 - d.j3 * d.j3));
    g.eps = (norm_j < 1e-12 * scale) ? +1 : (d.ecal >= 0.0 ? +1 : -1);

    const double au = arg_2pi(q.u);
    const double at = arg_2pi(q.t);
    if (au == at) {
        g.sigma = +1;
    } else {
        const bool diff_wraps = au < at;
        const bool sum_wraps = (au + at) >= 2.0 * std::numbers::pi;
        g.sigma = (diff_wraps == sum_wraps) ? +1 : -1;
    }
    return g;
}

inline GeomData geom_from_zw(const SpinorPair& p) {
    return geom_from_ut(ut_from_zw(p));
}

// Inverse map: moduli from |K-| and lambda, phases from the half angles of
// K- = e^{i phi}|K-| and J3 + i eps|vec| = e^{i theta}|K-|, overall sign
// from sigma.
inline UTPair ut_from_geom(const GeomData& g) {
    const double e2 = g.vec.euclid2();
    if (e2 == 0.0) {
        throw zero_vector("ut_from_geom: vec must be nonzero");
    }
    const double m2 = g.vec.mink2();
    if (m2 > 1e-12 * e2) {
        throw zero_vector("ut_from_geom: vec must be space-like or null");
    }
    const double norm_j = std::sqrt(std::max(0.0, -m2));
    const double abs_km = std::hypot(g.vec.k1, g.vec.k2);

    const double mod_u = std::sqrt(abs_km) * std::exp(0.5 * g.lambda);
    const double mod_t = std::sqrt(abs_km) * std::exp(-0.5 * g.lambda);
    const double phi = arg_2pi(cplx{g.vec.k1, -g.vec.k2});
    const double theta = arg_2pi(cplx{g.vec.j3, g.eps * norm_j});

    const double s = static_cast<double>(g.sigma);
    return {s * std::polar(mod_u, 0.5 * (phi + theta)), s * std::polar(mod_t, 0.5 * (phi - theta))};
}

inline SO32Data so32_from_zw(const SpinorPair& p) {
    SO32Data d;
    const cplx jm = p.z * std::conj(p.w);   // J- = z wbar
    d.J[0] = jm.real();
    d.J[1] = -jm.imag();
    d.J[2] = 0.5 * (std::norm(p.z) - std::norm(p.w));

    const cplx km = 0.5 * (p.z * p.z - std::conj(p.w) * std::conj(p.w));
    d.K[0] = km.real();
    d.K[1] = -km.imag();
    d.K[2] = -std::real(p.z * p.w);         // K3 = -(zbar wbar + z w)/2

    const cplx lm = cplx{0.0, 0.5} * (p.z * p.z + std::conj(p.w) * std::conj(p.w));
    d.L[0] = lm.real();
    d.L[1] = -lm.imag();
    d.L[2] = std::imag(p.z * p.w);          // L3 = Ecal

    d.E = 0.5 * (std::norm(p.z) + std::norm(p.w));
    return d;
}

// Future and past null contributions to the face normal:
// vec = null_z + null_w with null_z = (|z|^2, Re z^2, -Im z^2)/2 future
// and null_w past.
inline MinkVector3 null_part_z(const SpinorPair& p) {
    const cplx z2 = 0.5 * p.z * p.z;
    return {0.5 * std::norm(p.z), z2.real(), -z2.imag()};
}

inline MinkVector3 null_part_w(const SpinorPair& p) {
    const cplx w2 = 0.5 * std::conj(p.w) * std::conj(p.w);
    return {-0.5 * std::norm(p.w), -w2.real(), w2.imag()};
}

}  // namespace lorpoly
