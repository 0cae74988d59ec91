#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lorpoly/errors.hpp"
#include "lorpoly/spinor.hpp"

namespace lorpoly {

// Quadratic observable f = xi^T A xi over the phase-space column
// xi = (z_1, w_1, zbar_1, wbar_1, ..., z_F, w_F, wbar_F) with A complex
// symmetric. All generators used here have dyadic-rational entries, so
// bracket arithmetic on them is exact in double precision.
struct QuadObservable {
    Eigen::MatrixXcd a;

    QuadObservable() : a(Eigen::MatrixXcd::Zero(4, 4)) {}
    explicit QuadObservable(int faces) : a(Eigen::MatrixXcd::Zero(4 * faces, 4 * faces)) {}

    int faces() const { return static_cast<int>(a.rows()) / 4; }

    QuadObservable operator+(const QuadObservable& o) const {
        QuadObservable r(faces());
        r.a = a + o.a;
        return r;
    }
    QuadObservable operator-(const QuadObservable& o) const {
        QuadObservable r(faces());
        r.a = a - o.a;
        return r;
    }
    QuadObservable operator*(cplx c) const {
        QuadObservable r(faces());
        r.a = c * a;
        return r;
    }
};

inline int idx_z(int face) { return 4 * face; }
inline int idx_w(int face) { return 4 * face + 1; }
inline int idx_zbar(int face) { return 4 * face + 2; }
inline int idx_wbar(int face) { return 4 * face + 3; }

// Adds the monomial c * xi_i * xi_j to the observable.
inline void add_monomial(QuadObservable& f, int i, int j, cplx c) {
    f.a(i, j) += 0.5 * c;
    f.a(j, i) += 0.5 * c;
}

// The bracket tensor {xi_a, xi_b}: -i between each variable and its
// conjugate, zero otherwise.
inline Eigen::MatrixXcd omega_matrix(int faces) {
    Eigen::MatrixXcd om = Eigen::MatrixXcd::Zero(4 * faces, 4 * faces);
    const cplx mi{0.0, -1.0};
    for (int k = 0; k < faces; ++k) {
        om(idx_z(k), idx_zbar(k)) = mi;
        om(idx_zbar(k), idx_z(k)) = -mi;
        om(idx_w(k), idx_wbar(k)) = mi;
        om(idx_wbar(k), idx_w(k)) = -mi;
    }
    return om;
}

// {f, g} as a quadratic observable: coefficient matrix 2 (A Omega B - B Omega A).
inline QuadObservable bracket(const QuadObservable& f, const QuadObservable& g) {
    if (f.a.rows() != g.a.rows()) {
        throw dimension_mismatch("bracket: operands live on different face counts");
    }
    const Eigen::MatrixXcd om = omega_matrix(f.faces());
    QuadObservable r(f.faces());
    r.a = 2.0 * (f.a * om * g.a - g.a * om * f.a);
    return r;
}

inline double max_abs(const QuadObservable& f) { return f.a.cwiseAbs().maxCoeff(); }

inline Eigen::VectorXcd xi_from_pairs(const std::vector<SpinorPair>& pairs) {
    Eigen::VectorXcd xi(4 * pairs.size());
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        xi(idx_z(k)) = pairs[k].z;
        xi(idx_w(k)) = pairs[k].w;
        xi(idx_zbar(k)) = std::conj(pairs[k].z);
        xi(idx_wbar(k)) = std::conj(pairs[k].w);
    }
    return xi;
}

inline cplx evaluate_xi(const QuadObservable& f, const Eigen::VectorXcd& xi) {
    return xi.transpose() * f.a * xi;
}

inline cplx evaluate(const QuadObservable& f, const std::vector<SpinorPair>& pairs) {
    return evaluate_xi(f, xi_from_pairs(pairs));
}

inline cplx evaluate(const QuadObservable& f, const SpinorPair& p) {
    return evaluate(f, std::vector<SpinorPair>{p});
}

// Conjugation acts on coefficients as A -> sigma conj(A) sigma where sigma
// swaps each variable with its conjugate; real observables are fixed points.
inline QuadObservable conj_swap(const QuadObservable& f) {
    const int n = static_cast<int>(f.a.rows());
    QuadObservable r(f.faces());
    auto swapped = [](int i) { return (i % 4 < 2) ? i + 2 : i - 2; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r.a(swapped(i), swapped(j)) = std::conj(f.a(i, j));
        }
    }
    return r;
}

inline bool is_real_observable(const QuadObservable& f, double tol = 0.0) {
    return max_abs(f - conj_swap(f)) <= tol;
}

using GeneratorMap = std::map<std::string, QuadObservable>;

namespace detail {

// Per-face so(3,2) generators summed over all faces.
inline QuadObservable gen_sum(int faces, void (*fill)(QuadObservable&, int)) {
    QuadObservable f(faces);
    for (int k = 0; k < faces; ++k) fill(f, k);
    return f;
}

inline void fill_j3(QuadObservable& f, int k) {
    add_monomial(f, idx_z(k), idx_zbar(k), 0.5);
    add_monomial(f, idx_w(k), idx_wbar(k), -0.5);
}
inline void fill_jp(QuadObservable& f, int k) { add_monomial(f, idx_zbar(k), idx_w(k), 1.0); }
inline void fill_jm(QuadObservable& f, int k) { add_monomial(f, idx_z(k), idx_wbar(k), 1.0); }
inline void fill_kp(QuadObservable& f, int k) {
    add_monomial(f, idx_zbar(k), idx_zbar(k), 0.5);
    add_monomial(f, idx_w(k), idx_w(k), -0.5);
}
inline void fill_km(QuadObservable& f, int k) {
    add_monomial(f, idx_z(k), idx_z(k), 0.5);
    add_monomial(f, idx_wbar(k), idx_wbar(k), -0.5);
}
inline void fill_k3(QuadObservable& f, int k) {
    add_monomial(f, idx_zbar(k), idx_wbar(k), -0.5);
    add_monomial(f, idx_z(k), idx_w(k), -0.5);
}
inline void fill_l3(QuadObservable& f, int k) {
    add_monomial(f, idx_zbar(k), idx_wbar(k), cplx{0.0, 0.5});
    add_monomial(f, idx_z(k), idx_w(k), cplx{0.0, -0.5});
}
inline void fill_lp(QuadObservable& f, int k) {
    add_monomial(f, idx_zbar(k), idx_zbar(k), cplx{0.0, -0.5});
    add_monomial(f, idx_w(k), idx_w(k), cplx{0.0, -0.5});
}
inline void fill_lm(QuadObservable& f, int k) {
    add_monomial(f, idx_z(k), idx_z(k), cplx{0.0, 0.5});
    add_monomial(f, idx_wbar(k), idx_wbar(k), cplx{0.0, 0.5});
}
inline void fill_e(QuadObservable& f, int k) {
    add_monomial(f, idx_z(k), idx_zbar(k), 0.5);
    add_monomial(f, idx_w(k), idx_wbar(k), 0.5);
}

}  // namespace detail

// The ten so(3,2) generators (face-summed when faces > 1) plus the alias
// Ecal = L3 for the squeezing generator.
inline GeneratorMap standard_generators(int faces = 1) {
    GeneratorMap g;
    g["J3"] = detail::gen_sum(faces, detail::fill_j3);
    g["J+"] = detail::gen_sum(faces, detail::fill_jp);
    g["J-"] = detail::gen_sum(faces, detail::fill_jm);
    g["K3"] = detail::gen_sum(faces, detail::fill_k3);
    g["K+"] = detail::gen_sum(faces, detail::fill_kp);
    g["K-"] = detail::gen_sum(faces, detail::fill_km);
    g["L3"] = detail::gen_sum(faces, detail::fill_l3);
    g["L+"] = detail::gen_sum(faces, detail::fill_lp);
    g["L-"] = detail::gen_sum(faces, detail::fill_lm);
    g["E"] = detail::gen_sum(faces, detail::fill_e);
    g["Ecal"] = g["L3"];
    return g;
}

// Real 3-vector components and the shifted combination K3+E, needed by the
// commuting-triple relations. Coefficients stay dyadic.
inline GeneratorMap extended_generators(int faces = 1) {
    GeneratorMap g = standard_generators(faces);
    const cplx half{0.5, 0.0};
    const cplx mhalf_i{0.0, -0.5};
    g["J1"] = (g["J+"] + g["J-"]) * half;
    g["J2"] = (g["J+"] - g["J-"]) * mhalf_i;
    g["K1"] = (g["K+"] + g["K-"]) * half;
    g["K2"] = (g["K+"] - g["K-"]) * mhalf_i;
    g["L1"] = (g["L+"] + g["L-"]) * half;
    g["L2"] = (g["L+"] - g["L-"]) * mhalf_i;
    g["K3+E"] = g["K3"] + g["E"];
    return g;
}

// One relation {lhs, rhs} = sum of coeff * generator.
struct BracketRelation {
    std::string lhs;
    std::string rhs;
    std::vector<std::pair<cplx, std::string>> expected;
};

struct TableRow {
    std::string lhs;
    std::string rhs;
    double deviation = 0.0;
};

// Every displayed bracket of the classical algebra: the su(1,1) sector, its
// real basis, the sl(2,C) and su(2) sectors, the remaining so(3,2) brackets,
// the squeezing relations, the three commuting sl(2,R) triples and the shift
// bracket {Ecal, K3+E} = K3+E.
inline std::vector<BracketRelation> standard_bracket_table() {
    const cplx i{0.0, 1.0};
    const cplx one{1.0, 0.0};
    std::vector<BracketRelation> t;
    auto rel = [&t](std::string lhs, std::string rhs,
                    std::vector<std::pair<cplx, std::string>> exp) {
        t.push_back({std::move(lhs), std::move(rhs), std::move(exp)});
    };

    // su(1,1)
    rel("J3", "K+", {{-i, "K+"}});
    rel("J3", "K-", {{i, "K-"}});
    rel("K+", "K-", {{2.0 * i, "J3"}});
    rel("K1", "K2", {{-one, "J3"}});
    rel("J3", "K1", {{one, "K2"}});
    rel("J3", "K2", {{-one, "K1"}});
    rel("Ecal", "J3", {});
    rel("Ecal", "K1", {});
    rel("Ecal", "K2", {});

    // sl(2,C)
    rel("K3", "K+", {{i, "J+"}});
    rel("K3", "K-", {{-i, "J-"}});
    rel("K3", "J+", {{-i, "K+"}});
    rel("K3", "J-", {{i, "K-"}});
    rel("J+", "K-", {{-2.0 * i, "K3"}});
    rel("J-", "K+", {{2.0 * i, "K3"}});
    rel("J3", "K3", {});
    rel("J+", "K+", {});
    rel("J-", "K-", {});

    // su(2) sector
    rel("J3", "J+", {{-i, "J+"}});
    rel("J3", "J-", {{i, "J-"}});
    rel("J+", "J-", {{-2.0 * i, "J3"}});

    // remaining so(3,2)
    rel("L3", "L+", {{i, "J+"}});
    rel("L3", "L-", {{-i, "J-"}});
    rel("L+", "L-", {{2.0 * i, "J3"}});
    rel("K3", "L3", {{-one, "E"}});
    rel("K+", "L-", {{-2.0 * one, "E"}});
    rel("K-", "L+", {{-2.0 * one, "E"}});
    rel("J3", "L+", {{-i, "L+"}});
    rel("J3", "L-", {{i, "L-"}});
    rel("L3", "J+", {{-i, "L+"}});
    rel("L3", "J-", {{i, "L-"}});
    rel("J+", "L-", {{-2.0 * i, "L3"}});
    rel("J-", "L+", {{2.0 * i, "L3"}});
    rel("K3", "L+", {});
    rel("K3", "L-", {});
    rel("L3", "K+", {});
    rel("L3", "K-", {});
    rel("K+", "L+", {});
    rel("K-", "L-", {});
    rel("J+", "L+", {});
    rel("J-", "L-", {});
    rel("E", "J3", {});
    rel("E", "J+", {});
    rel("E", "J-", {});
    rel("E", "K3", {{one, "L3"}});
    rel("E", "K+", {{one, "L+"}});
    rel("E", "K-", {{one, "L-"}});
    rel("E", "L3", {{-one, "K3"}});
    rel("E", "L+", {{-one, "K+"}});
    rel("E", "L-", {{-one, "K-"}});

    // squeezing relations
    rel("Ecal", "L+", {{i, "J+"}});
    rel("Ecal", "L-", {{-i, "J-"}});
    rel("Ecal", "J+", {{-i, "L+"}});
    rel("Ecal", "J-", {{i, "L-"}});
    rel("Ecal", "K3", {{one, "E"}});
    rel("Ecal", "E", {{one, "K3"}});

    // commuting sl(2,R) triple attached to K1
    rel("Ecal", "J1", {{one, "L2"}});
    rel("Ecal", "L2", {{one, "J1"}});
    rel("J1", "L2", {{one, "Ecal"}});
    rel("K1", "J1", {});
    rel("K1", "L2", {});
    rel("K1", "Ecal", {});

    // triple attached to K2
    rel("Ecal", "J2", {{-one, "L1"}});
    rel("Ecal", "L1", {{-one, "J2"}});
    rel("J2", "L1", {{-one, "Ecal"}});
    rel("K2", "J2", {});
    rel("K2", "L1", {});
    rel("K2", "Ecal", {});

    // time-like triple attached to J3
    rel("E", "K3", {{one, "Ecal"}});
    rel("J3", "K3", {});
    rel("J3", "E", {});
    rel("J3", "Ecal", {});

    // shift bracket: K3+E is an eigenvector of {Ecal, .}
    rel("Ecal", "K3+E", {{one, "K3+E"}});

    return t;
}

inline std::vector<TableRow> verify_table(const GeneratorMap& gens,
                                          const std::vector<BracketRelation>& table) {
    std::vector<TableRow> rows;
    rows.reserve(table.size());
    for (const auto& r : table) {
        auto lhs = gens.find(r.lhs);
        auto rhs = gens.find(r.rhs);
        if (lhs == gens.end() || rhs == gens.end()) {
            throw unknown_generator("verify_table: unknown generator in relation {" + r.lhs +
                                    ", " + r.rhs + "}");
        }
        QuadObservable diff = bracket(lhs->second, rhs->second);
        for (const auto& [coeff, name] : r.expected) {
            auto g = gens.find(name);
            if (g == gens.end()) {
                throw unknown_generator("verify_table: unknown generator " + name);
            }
            diff = diff - g->second * coeff;
        }
        rows.push_back({r.lhs, r.rhs, max_abs(diff)});
    }
    return rows;
}

// Max-abs coefficient of {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
inline double jacobi_defect(const QuadObservable& f, const QuadObservable& g,
                            const QuadObservable& h) {
    const QuadObservable s =
        bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
    return max_abs(s);
}

// One explicit Euler step of the Hamiltonian flow of f: xi' = xi - 2 h Omega A xi.
// For real f the step preserves the conjugate structure of xi.
inline Eigen::VectorXcd euler_step_xi(const QuadObservable& f, const Eigen::VectorXcd& xi,
                                      double step) {
    if (!(step > 0.0)) {
        throw non_positive_step("euler_step_xi: step must be positive");
    }
    return xi - 2.0 * step * (omega_matrix(f.faces()) * (f.a * xi));
}

inline std::vector<SpinorPair> euler_flow_step(const QuadObservable& f,
                                               const std::vector<SpinorPair>& pairs,
                                               double step) {
    const Eigen::VectorXcd xi = euler_step_xi(f, xi_from_pairs(pairs), step);
    std::vector<SpinorPair> out(pairs.size());
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        out[k] = {xi(idx_z(k)), xi(idx_w(k))};
    }
    return out;
}

// Two-index deformation generators on N faces. alpha_z and alpha_w are real
// antisymmetric, beta is real with beta_ii = 2 Ecal_i.
inline QuadObservable alpha_z_obs(int i, int j, int faces) {
    QuadObservable f(faces);
    add_monomial(f, idx_zbar(i), idx_z(j), cplx{0.0, 1.0});
    add_monomial(f, idx_z(i), idx_zbar(j), cplx{0.0, -1.0});
    return f;
}

inline QuadObservable alpha_w_obs(int i, int j, int faces) {
    QuadObservable f(faces);
    add_monomial(f, idx_wbar(i), idx_w(j), cplx{0.0, 1.0});
    add_monomial(f, idx_w(i), idx_wbar(j), cplx{0.0, -1.0});
    return f;
}

inline QuadObservable beta_obs(int i, int j, int faces) {
    QuadObservable f(faces);
    add_monomial(f, idx_zbar(i), idx_wbar(j), cplx{0.0, 1.0});
    add_monomial(f, idx_z(i), idx_w(j), cplx{0.0, -1.0});
    return f;
}

inline QuadObservable ecal_total_obs(int faces) {
    return detail::gen_sum(faces, detail::fill_l3);
}

// Exhaustive check of the classical two-index algebra on N faces. Verifies
// both the raw alpha/beta brackets and the graded repackaging in
// alpha+- , beta S/A, Delta = alpha+ + betaS, plus the Ecal grading. All
// deviations are exact zeros; returns the max over every index tuple.
inline double gl_n_classical_check(int faces) {
    if (faces < 1) throw bad_size("gl_n_classical_check: need at least one face");
    const int n = faces;
    auto az = [n](int i, int j) { return alpha_z_obs(i, j, n); };
    auto aw = [n](int i, int j) { return alpha_w_obs(i, j, n); };
    auto be = [n](int i, int j) { return beta_obs(i, j, n); };
    auto ap = [&](int i, int j) { return az(i, j) + aw(i, j); };
    auto am = [&](int i, int j) { return az(i, j) - aw(i, j); };
    auto bs = [&](int i, int j) { return be(i, j) + be(j, i); };
    auto ba = [&](int i, int j) { return be(i, j) - be(j, i); };
    auto dd = [&](int i, int j) { return ap(i, j) + bs(i, j); };
    auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    const QuadObservable ecal = ecal_total_obs(n);

    double worst = 0.0;
    auto push = [&worst](const QuadObservable& lhs, const QuadObservable& rhs) {
        worst = std::max(worst, max_abs(lhs - rhs));
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            push(bracket(ecal, az(i, j)), ba(i, j) * cplx{-0.5, 0.0});
            push(bracket(ecal, aw(i, j)), ba(i, j) * cplx{0.5, 0.0});
            push(bracket(ecal, be(i, j)), am(i, j) * cplx{-0.5, 0.0});
            push(bracket(ecal, ap(i, j)), QuadObservable(n));
            push(bracket(ecal, bs(i, j)), QuadObservable(n));
            push(bracket(ecal, am(i, j)), ba(i, j) * cplx{-1.0, 0.0});
            push(bracket(ecal, ba(i, j)), am(i, j) * cplx{-1.0, 0.0});
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    push(bracket(az(i, j), az(k, l)),
                         az(i, l) * d(j, k) + az(j, k) * d(i, l) - az(i, k) * d(j, l) -
                             az(j, l) * d(i, k));
                    push(bracket(aw(i, j), aw(k, l)),
                         aw(i, l) * d(j, k) + aw(j, k) * d(i, l) - aw(i, k) * d(j, l) -
                             aw(j, l) * d(i, k));
                    push(bracket(az(i, j), aw(k, l)), QuadObservable(n));
                    push(bracket(be(i, j), be(k, l)),
                         aw(j, l) * d(i, k) + az(i, k) * d(j, l));
                    push(bracket(az(i, j), be(k, l)),
                         be(i, l) * d(j, k) - be(j, l) * d(i, k));
                    push(bracket(aw(i, j), be(k, l)),
                         be(k, i) * d(j, l) - be(k, j) * d(i, l));
                    push(bracket(ap(i, j), ap(k, l)),
                         ap(i, l) * d(j, k) + ap(j, k) * d(i, l) - ap(i, k) * d(j, l) -
                             ap(j, l) * d(i, k));
                    push(bracket(ap(i, j), bs(k, l)),
                         bs(i, l) * d(j, k) + bs(i, k) * d(j, l) - bs(j, l) * d(i, k) -
                             bs(j, k) * d(i, l));
                    push(bracket(bs(i, j), bs(k, l)),
                         ap(i, l) * d(j, k) + ap(j, k) * d(i, l) + ap(i, k) * d(j, l) +
                             ap(j, l) * d(i, k));
                    push(bracket(dd(i, j), dd(k, l)),
                         dd(i, l) * cplx{2.0 * d(j, k), 0.0} -
                             dd(k, j) * cplx{2.0 * d(i, l), 0.0});
                }
            }
        }
    }
    return worst;
}

// Finite-difference cross-check of the bracket: compares the Euler-step
// derivative of every standard generator against {f, g} at p. The residual
// is O(step).
inline double flow_check(const QuadObservable& f, const SpinorPair& p, double step) {
    if (!(step > 0.0)) {
        throw non_positive_step("flow_check: step must be positive");
    }
    const Eigen::VectorXcd xi = xi_from_pairs({p});
    const Eigen::VectorXcd xi1 = euler_step_xi(f, xi, step);
    double worst = 0.0;
    for (const auto& [name, g] : standard_generators()) {
        const cplx numeric = (evaluate_xi(g, xi1) - evaluate_xi(g, xi)) / step;
        const cplx exact = evaluate_xi(bracket(f, g), xi);
        worst = std::max(worst, std::abs(numeric - exact));
    }
    return worst;
}

}  // namespace lorpoly
