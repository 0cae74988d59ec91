#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "lorpoly/errors.hpp"
#include "lorpoly/poisson.hpp"
#include "lorpoly/spinor.hpp"

namespace lorpoly {

using SparseOp = Eigen::SparseMatrix<cplx>;

// Product basis |n_0, ..., n_{modes-1}>, each occupation 0..n_max, ordered
// lexicographically with mode 0 most significant.
struct FockBasis {
    int n_max = 0;
    int n_modes = 0;
    long dim = 0;

    FockBasis() = default;
    FockBasis(int nm, int modes) : n_max(nm), n_modes(modes), dim(1) {
        for (int m = 0; m < modes; ++m) dim *= nm + 1;
    }

    long stride(int mode) const {
        long s = 1;
        for (int m = mode + 1; m < n_modes; ++m) s *= n_max + 1;
        return s;
    }

    int occupation(long index, int mode) const {
        return static_cast<int>((index / stride(mode)) % (n_max + 1));
    }

    // States that truncation cannot touch under a product of two quadratic
    // operators: every occupation at least `depth` below the cutoff.
    bool interior(long index, int depth = 2) const {
        for (int m = 0; m < n_modes; ++m) {
            if (occupation(index, m) > n_max - depth) return false;
        }
        return true;
    }

    std::vector<char> interior_mask(int depth = 2) const {
        std::vector<char> mask(dim);
        for (long i = 0; i < dim; ++i) mask[i] = interior(i, depth) ? 1 : 0;
        return mask;
    }
};

inline SparseOp sparse_identity(long dim) {
    SparseOp id(dim, dim);
    id.setIdentity();
    return id;
}

inline SparseOp kron(const SparseOp& a, const SparseOp& b) {
    SparseOp c(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(static_cast<std::size_t>(a.nonZeros()) * b.nonZeros());
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SparseOp::InnerIterator ita(a, ka); ita; ++ita) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SparseOp::InnerIterator itb(b, kb); itb; ++itb) {
                    trip.emplace_back(
                        static_cast<int>(ita.row() * b.rows() + itb.row()),
                        static_cast<int>(ita.col() * b.cols() + itb.col()),
                        ita.value() * itb.value());
                }
            }
        }
    }
    c.setFromTriplets(trip.begin(), trip.end());
    return c;
}

// Single-mode annihilation on occupations 0..n_max.
inline SparseOp lowering_single(int n_max) {
    SparseOp a(n_max + 1, n_max + 1);
    std::vector<Eigen::Triplet<cplx>> trip;
    for (int n = 1; n <= n_max; ++n) trip.emplace_back(n - 1, n, cplx{std::sqrt(double(n)), 0.0});
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

// Annihilation operator of one mode embedded in the full product space.
inline SparseOp mode_lowering(const FockBasis& basis, int mode) {
    SparseOp op = lowering_single(basis.n_max);
    long pre = 1, post = 1;
    for (int m = 0; m < mode; ++m) pre *= basis.n_max + 1;
    for (int m = mode + 1; m < basis.n_modes; ++m) post *= basis.n_max + 1;
    return kron(sparse_identity(pre), kron(op, sparse_identity(post)));
}

inline SparseOp adjoint(const SparseOp& a) { return SparseOp(a.adjoint()); }

inline SparseOp commutator(const SparseOp& a, const SparseOp& b) {
    return SparseOp(a * b - b * a);
}

inline double max_abs(const SparseOp& a) {
    double worst = 0.0;
    for (int k = 0; k < a.outerSize(); ++k) {
        for (SparseOp::InnerIterator it(a, k); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    return worst;
}

// Max-abs over entries whose row and column both lie in the interior.
inline double interior_residual(const SparseOp& a, const std::vector<char>& mask) {
    double worst = 0.0;
    for (int k = 0; k < a.outerSize(); ++k) {
        for (SparseOp::InnerIterator it(a, k); it; ++it) {
            if (mask[it.row()] && mask[it.col()]) {
                worst = std::max(worst, std::abs(it.value()));
            }
        }
    }
    return worst;
}

// Two-oscillator representation of su(1,1) and its so(3,2) extension.
// casimir and ecal_sq carry the exact matrix elements of the untruncated
// operators: they are built on a cutoff padded by 2 and restricted back, so
// the relation casimir = -(ecal_sq + 1/4) holds entrywise everywhere.
struct SU11Ops {
    int n_max = 0;
    FockBasis basis;
    SparseOp a, b, j3, kp, km, ecal, k3, jp, jm, lp, lm, e_dil;
    SparseOp casimir, ecal_sq;
    std::vector<char> interior;
};

namespace detail {

struct RawSU11 {
    SparseOp j3, kp, km, ecal;
};

inline RawSU11 raw_su11(const SparseOp& a, const SparseOp& b) {
    const SparseOp ad = adjoint(a);
    const SparseOp bd = adjoint(b);
    const cplx ih{0.0, 0.5};
    RawSU11 r;
    r.j3 = SparseOp(0.5 * (ad * a) - 0.5 * (bd * b));
    r.kp = SparseOp(0.5 * (ad * ad) - 0.5 * (b * b));
    r.km = SparseOp(0.5 * (a * a) - 0.5 * (bd * bd));
    r.ecal = SparseOp(ih * (ad * bd) - ih * (a * b));
    return r;
}

// Selection matrix keeping the states of `small` inside the padded basis.
inline SparseOp window_selection(const FockBasis& small, const FockBasis& big) {
    SparseOp s(small.dim, big.dim);
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(small.dim);
    for (long i = 0; i < small.dim; ++i) {
        long big_index = 0;
        for (int m = 0; m < small.n_modes; ++m) {
            big_index += small.occupation(i, m) * big.stride(m);
        }
        trip.emplace_back(static_cast<int>(i), static_cast<int>(big_index), cplx{1.0, 0.0});
    }
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

}  // namespace detail

inline SU11Ops build_su11_ops(int n_max) {
    if (n_max < 2) throw cutoff_too_small("build_su11_ops: n_max must be at least 2");
    SU11Ops ops;
    ops.n_max = n_max;
    ops.basis = FockBasis(n_max, 2);
    ops.a = mode_lowering(ops.basis, 0);
    ops.b = mode_lowering(ops.basis, 1);
    const SparseOp ad = adjoint(ops.a);
    const SparseOp bd = adjoint(ops.b);
    const detail::RawSU11 raw = detail::raw_su11(ops.a, ops.b);
    ops.j3 = raw.j3;
    ops.kp = raw.kp;
    ops.km = raw.km;
    ops.ecal = raw.ecal;
    const cplx ih{0.0, 0.5};
    ops.k3 = SparseOp(-0.5 * (ad * bd) - 0.5 * (ops.a * ops.b));
    ops.jp = SparseOp(ad * ops.b);
    ops.jm = SparseOp(ops.a * bd);
    ops.lp = SparseOp(-ih * (ad * ad) - ih * (ops.b * ops.b));
    ops.lm = SparseOp(ih * (ops.a * ops.a) + ih * (bd * bd));
    ops.e_dil = SparseOp(0.5 * (ad * ops.a) + 0.5 * (bd * ops.b) +
                         0.5 * sparse_identity(ops.basis.dim));

    const FockBasis big(n_max + 2, 2);
    const SparseOp a_big = mode_lowering(big, 0);
    const SparseOp b_big = mode_lowering(big, 1);
    const detail::RawSU11 rb = detail::raw_su11(a_big, b_big);
    const SparseOp c_big(rb.j3 * rb.j3 - 0.5 * (rb.kp * rb.km) - 0.5 * (rb.km * rb.kp));
    const SparseOp e2_big(rb.ecal * rb.ecal);
    const SparseOp sel = detail::window_selection(ops.basis, big);
    ops.casimir = SparseOp(sel * c_big * sel.transpose());
    ops.ecal_sq = SparseOp(sel * e2_big * sel.transpose());
    ops.interior = ops.basis.interior_mask(2);
    return ops;
}

// Quantum counterparts of the classical generator set, same names.
inline std::map<std::string, SparseOp> quantum_generators(const SU11Ops& ops) {
    std::map<std::string, SparseOp> g;
    g["J3"] = ops.j3;
    g["J+"] = ops.jp;
    g["J-"] = ops.jm;
    g["K3"] = ops.k3;
    g["K+"] = ops.kp;
    g["K-"] = ops.km;
    g["L3"] = ops.ecal;
    g["L+"] = ops.lp;
    g["L-"] = ops.lm;
    g["E"] = ops.e_dil;
    g["Ecal"] = ops.ecal;
    const cplx half{0.5, 0.0};
    const cplx mhalf_i{0.0, -0.5};
    g["J1"] = SparseOp(half * (g["J+"] + g["J-"]));
    g["J2"] = SparseOp(mhalf_i * (g["J+"] - g["J-"]));
    g["K1"] = SparseOp(half * (g["K+"] + g["K-"]));
    g["K2"] = SparseOp(mhalf_i * (g["K+"] - g["K-"]));
    g["L1"] = SparseOp(half * (g["L+"] + g["L-"]));
    g["L2"] = SparseOp(mhalf_i * (g["L+"] - g["L-"]));
    g["K3+E"] = SparseOp(g["K3"] + g["E"]);
    return g;
}

struct QuantumRow {
    std::string relation;
    double interior_residual = 0.0;
    double full_residual = 0.0;
    bool informational = false;
};

struct QuantumReport {
    int n_max = 0;
    int faces = 1;
    std::vector<QuantumRow> rows;
    std::vector<std::string> notes;

    double max_interior() const {
        double worst = 0.0;
        for (const auto& r : rows) {
            if (!r.informational) worst = std::max(worst, r.interior_residual);
        }
        return worst;
    }
};

// Verifies [f^, g^] = i ({f,g})^ for every relation of the classical table,
// plus the Casimir identities. The commutator of two quadratics moves
// occupations by at most 2, so depth-2 interior elements are truncation-free.
inline QuantumReport commutator_check(int n_max) {
    if (n_max < 4) throw cutoff_too_small("commutator_check: n_max must be at least 4");
    const SU11Ops ops = build_su11_ops(n_max);
    const std::map<std::string, SparseOp> gen = quantum_generators(ops);
    const cplx iu{0.0, 1.0};

    QuantumReport rep;
    rep.n_max = n_max;
    for (const auto& rel : standard_bracket_table()) {
        SparseOp r = commutator(gen.at(rel.lhs), gen.at(rel.rhs));
        for (const auto& [coeff, name] : rel.expected) {
            r = SparseOp(r - (iu * coeff) * gen.at(name));
        }
        rep.rows.push_back({"[" + rel.lhs + ", " + rel.rhs + "]",
                            interior_residual(r, ops.interior), max_abs(r), false});
    }

    const SparseOp id = sparse_identity(ops.basis.dim);
    const SparseOp cas_rel(ops.casimir + ops.ecal_sq + 0.25 * id);
    rep.rows.push_back({"C + (Ecal^2 + 1/4) = 0", interior_residual(cas_rel, ops.interior),
                        max_abs(cas_rel), false});
    for (const char* name : {"J3", "K+", "K-"}) {
        const SparseOp r = commutator(ops.casimir, gen.at(name));
        rep.rows.push_back({std::string("[C, ") + name + "]",
                            interior_residual(r, ops.interior), max_abs(r), false});
    }

    // The opposite sign convention for [K+, K-], quoted in some displays of
    // this algebra, is inconsistent with [J3, K+-] = +-K+- and with the
    // Casimir identity; its residual is reported but not gated on.
    const SparseOp alt(commutator(ops.kp, ops.km) - 2.0 * ops.j3);
    rep.rows.push_back({"[K+, K-] = +2 J3 (alternate sign, informational)",
                        interior_residual(alt, ops.interior), max_abs(alt), true});
    rep.notes.push_back(
        "the operators satisfy [K+, K-] = -2 J3, matching i{K+, K-} = -2 J3; "
        "the opposite sign leaves an interior residual of 4 max|J3|");
    return rep;
}

}  // namespace lorpoly
