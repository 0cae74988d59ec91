#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lorpoly/lorpoly.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lorpoly;

constexpr const char* kPrngName = "mt19937_64-boxmuller-v1";

double tolerance_scale() {
    const char* env = std::getenv("LORPOLY_TOLERANCE_SCALE");
    if (env == nullptr || *env == '\0') return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || v <= 0.0) return 1.0;
    return v;
}

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json quantum_rows_json(const QuantumReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"relation", r.relation},
                        {"interior_residual", r.interior_residual},
                        {"full_residual", r.full_residual},
                        {"informational", r.informational}});
    }
    return rows;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_algebra_check(const std::string& scope, int cutoff, int faces, bool include_boundary,
                      const std::string& csv_path) {
    const double ts = tolerance_scale();
    json report;
    report["command"] = "algebra-check";
    report["scope"] = scope;
    report["tolerance_scale"] = ts;
    bool pass = true;
    std::vector<std::string> csv_lines{"relation,interior_residual,full_residual"};

    if (scope == "classical" || scope == "all") {
        const GeneratorMap gens = extended_generators();
        json rows = json::array();
        double worst = 0.0;
        for (const auto& row : verify_table(gens, standard_bracket_table())) {
            rows.push_back({{"lhs", row.lhs}, {"rhs", row.rhs}, {"deviation", row.deviation}});
            csv_lines.push_back("{" + row.lhs + "; " + row.rhs + "}," +
                                format_double(row.deviation) + "," +
                                format_double(row.deviation));
            worst = std::max(worst, row.deviation);
        }
        const double gl_dev = gl_n_classical_check(3);
        csv_lines.push_back("gl_N classical closure (N=3)," + format_double(gl_dev) + "," +
                            format_double(gl_dev));

        double jacobi_worst = 0.0;
        std::vector<QuadObservable> pool;
        for (const auto& [name, g] : gens) pool.push_back(g);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            jacobi_worst = std::max(
                jacobi_worst, jacobi_defect(pool[i], pool[(i + 3) % pool.size()],
                                            pool[(i + 7) % pool.size()]));
        }

        report["classical"] = {{"rows", rows},
                               {"max_deviation", worst},
                               {"gl_n_closure_deviation", gl_dev},
                               {"jacobi_defect", jacobi_worst}};
        pass = pass && worst <= 0.0 && gl_dev <= 0.0 && jacobi_worst <= 1e-13 * ts;
    }

    if (scope == "quantum" || scope == "all") {
        const QuantumReport rep1 = commutator_check(cutoff);
        const QuantumReport rep2 = gl_n_quantum_check(faces, cutoff);
        const double tol = 1e-13 * ts;
        double worst = 0.0;
        for (const QuantumReport* rep : {&rep1, &rep2}) {
            for (const auto& r : rep->rows) {
                csv_lines.push_back(r.relation + "," + format_double(r.interior_residual) +
                                    "," + format_double(r.full_residual));
                if (r.informational) continue;
                worst = std::max(worst,
                                 include_boundary ? r.full_residual : r.interior_residual);
            }
        }
        json notes = json::array();
        for (const auto& n : rep1.notes) notes.push_back(n);
        for (const auto& n : rep2.notes) notes.push_back(n);
        report["quantum"] = {{"cutoff", cutoff},
                             {"faces", faces},
                             {"include_boundary", include_boundary},
                             {"tolerance", tol},
                             {"su11_rows", quantum_rows_json(rep1)},
                             {"gl_n_rows", quantum_rows_json(rep2)},
                             {"max_gated_residual", worst},
                             {"notes", notes}};
        pass = pass && worst <= tol;
    }

    report["pass"] = pass;
    if (!csv_path.empty()) {
        std::string csv;
        for (const auto& line : csv_lines) csv += line + "\n";
        write_text_atomic(csv_path, csv);
    }
    emit(report);
    return pass ? 0 : 2;
}

int run_sample(int n, double area, std::uint64_t seed, const std::string& out) {
    const Configuration c = sample_polyhedron(n, area, seed);
    write_config(out, ConfigFile{1, c});

    json faces = json::array();
    for (const auto& p : c) {
        const SU11Data d = su11_from_zw(p);
        const UTPair q = ut_from_zw(p);
        json face;
        face["j"] = {d.vec().j3, d.vec().k1, d.vec().k2};
        face["ecal"] = d.ecal;
        if (std::abs(q.u) > 0.0 && std::abs(q.t) > 0.0) {
            face["lambda"] = lambda_from(q);
        } else {
            face["lambda"] = nullptr;
        }
        faces.push_back(face);
    }
    const ClosureResidual res = closure_residual(c);
    json report;
    report["command"] = "sample";
    report["n"] = n;
    report["area"] = area;
    report["seed"] = seed;
    report["prng"] = kPrngName;
    report["out"] = out;
    report["total_area"] = total_area(c);
    report["closure_residual"] = {{"vec", {res.vec.j3, res.vec.k1, res.vec.k2}},
                                  {"scalar", res.scalar},
                                  {"norm", res.norm()}};
    report["scale"] = scale_of(c);
    report["faces"] = faces;
    emit(report);
    return 0;
}

int run_decompose(const std::string& in, const std::string& matrix_csv) {
    const ConfigFile cfg = read_config(in);
    const GLElement g = decompose(cfg.pairs);
    const double area = total_area(cfg.pairs);
    const Configuration recon = gl_apply(g, squashed(static_cast<int>(cfg.pairs.size()), area));
    double residual = 0.0;
    for (std::size_t i = 0; i < cfg.pairs.size(); ++i) {
        residual = std::max(residual, std::abs(recon[i].z - cfg.pairs[i].z));
        residual = std::max(residual, std::abs(recon[i].w - cfg.pairs[i].w));
    }
    if (!matrix_csv.empty()) write_text_atomic(matrix_csv, matrix_to_csv(g.m));

    json report;
    report["command"] = "decompose";
    report["in"] = in;
    report["total_area"] = area;
    report["m"] = matrix_json(g.m);
    report["mtilde"] = matrix_json(g.mtilde);
    report["condition_number"] = g.cond();
    report["pairing_defect"] = g.pairing_defect();
    report["reconstruction_residual"] = residual;
    emit(report);
    return 0;
}

int run_close(const std::string& in, const std::string& out) {
    const ConfigFile cfg = read_config(in);
    const double before = closure_residual(cfg.pairs).norm();
    const CloseResult r = close_configuration(cfg.pairs);
    if (!out.empty()) write_config(out, ConfigFile{1, r.closed});

    json report;
    report["command"] = "close";
    report["in"] = in;
    report["tau"] = r.tau;
    report["lambda"] = {{"a", {r.lambda_g.a.real(), r.lambda_g.a.imag()}},
                        {"b", {r.lambda_g.b.real(), r.lambda_g.b.imag()}}};
    report["residual_before"] = before;
    report["residual_after"] = closure_residual(r.closed).norm();
    report["scale"] = scale_of(r.closed);
    if (!out.empty()) report["out"] = out;
    emit(report);
    return 0;
}

int run_quantum_casimir(double s, double m, int cutoff, const std::string& out) {
    const double m_used = std::abs(m);
    const CasimirEigenvector v = casimir_recursion(s, m_used, cutoff);
    std::string csv = "n,re_alpha,im_alpha\n";
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
        csv += std::to_string(n) + "," + format_double(v.coeffs[n].real()) + "," +
               format_double(v.coeffs[n].imag()) + "\n";
    }

    json report;
    report["command"] = "quantum-casimir";
    report["s"] = s;
    report["m"] = m;
    report["m_used"] = m_used;
    if (m < 0.0) report["note"] = "negative m mapped by swapping the two oscillators";
    report["cutoff"] = cutoff;
    if (cutoff >= 256) {
        const AsymptoticFit fit = asymptotic_check(v);
        report["fit"] = {{"exponent", fit.exponent}, {"phase_rate", fit.phase_rate}};
    }
    if (!out.empty()) {
        write_text_atomic(out, csv);
        report["out"] = out;
        emit(report);
    } else {
        std::cout << csv;
        std::cerr << report.dump(2) << "\n";
    }
    return 0;
}

int run_quantum_check(int cutoff, int faces, bool include_boundary) {
    const double ts = tolerance_scale();
    const double tol = 1e-13 * ts;
    const QuantumReport rep1 = commutator_check(cutoff);
    const QuantumReport rep2 = gl_n_quantum_check(faces, cutoff);
    double worst = 0.0;
    for (const QuantumReport* rep : {&rep1, &rep2}) {
        for (const auto& r : rep->rows) {
            if (r.informational) continue;
            worst = std::max(worst, include_boundary ? r.full_residual : r.interior_residual);
        }
    }
    const bool pass = worst <= tol;
    json notes = json::array();
    for (const auto& n : rep1.notes) notes.push_back(n);
    for (const auto& n : rep2.notes) notes.push_back(n);
    json report;
    report["command"] = "quantum-check";
    report["cutoff"] = cutoff;
    report["faces"] = faces;
    report["include_boundary"] = include_boundary;
    report["tolerance"] = tol;
    report["su11_rows"] = quantum_rows_json(rep1);
    report["gl_n_rows"] = quantum_rows_json(rep2);
    report["notes"] = notes;
    report["max_gated_residual"] = worst;
    report["pass"] = pass;
    emit(report);
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentzian polyhedra toolkit: spinor phase space, closure, "
                 "deformation orbits and their Fock-space quantization"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("algebra-check", "verify the bracket/commutator tables");
    std::string scope = "all";
    int check_cutoff = 6;
    int check_faces = 2;
    bool check_boundary = false;
    std::string check_csv;
    check->add_option("--scope", scope, "classical, quantum or all")
        ->check(CLI::IsMember({"classical", "quantum", "all"}));
    check->add_option("--cutoff", check_cutoff, "occupation cutoff for the quantum scope");
    check->add_option("--faces", check_faces, "face count for the quantum gl_N table");
    check->add_flag("--include-boundary", check_boundary,
                    "gate on full-matrix residuals including truncation artifacts");
    check->add_option("--csv", check_csv, "write residual rows to a CSV file");

    auto* sample = app.add_subcommand("sample", "draw a random closed configuration");
    int sample_n = 0;
    double sample_area = 0.0;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    sample->add_option("-n,--faces", sample_n, "number of faces")->required();
    sample->add_option("-a,--area", sample_area, "total area")->required();
    sample->add_option("--seed", sample_seed, "PRNG seed");
    sample->add_option("-o,--out", sample_out, "output configuration path")->required();

    auto* dec = app.add_subcommand("decompose", "extract the deformation element of a closed "
                                                "configuration");
    std::string dec_in;
    std::string dec_csv;
    dec->add_option("in", dec_in, "input configuration path")->required();
    dec->add_option("--matrix-csv", dec_csv, "write M to a CSV file");

    auto* close_cmd = app.add_subcommand("close", "deform a configuration into a closed one");
    std::string close_in;
    std::string close_out;
    close_cmd->add_option("in", close_in, "input configuration path")->required();
    close_cmd->add_option("-o,--out", close_out, "output configuration path");

    auto* qc = app.add_subcommand("quantum-casimir", "squeezing eigenvector recursion");
    double qc_s = 0.0;
    double qc_m = 0.0;
    int qc_cutoff = 0;
    std::string qc_out;
    qc->add_option("-s,--s", qc_s, "eigenvalue parameter s")->required();
    qc->add_option("-m,--m", qc_m, "magnetic label m (half-integer)")->required();
    qc->add_option("--cutoff", qc_cutoff, "recursion length")->required();
    qc->add_option("-o,--out", qc_out, "CSV output path");

    auto* qk = app.add_subcommand("quantum-check", "quantum commutator suite");
    int qk_cutoff = 6;
    int qk_faces = 2;
    bool qk_boundary = false;
    qk->add_option("--cutoff", qk_cutoff, "occupation cutoff");
    qk->add_option("--faces", qk_faces, "face count for the gl_N table");
    qk->add_flag("--include-boundary", qk_boundary,
                 "gate on full-matrix residuals including truncation artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (check->parsed()) {
            if ((scope == "quantum" || scope == "all") && check_cutoff < 4) {
                std::cerr << "algebra-check: quantum scope needs --cutoff >= 4\n";
                return 64;
            }
            return run_algebra_check(scope, check_cutoff, check_faces, check_boundary,
                                     check_csv);
        }
        if (sample->parsed()) return run_sample(sample_n, sample_area, sample_seed, sample_out);
        if (dec->parsed()) return run_decompose(dec_in, dec_csv);
        if (close_cmd->parsed()) return run_close(close_in, close_out);
        if (qc->parsed()) {
            if (qc_cutoff < 8) {
                std::cerr << "quantum-casimir: --cutoff must be at least 8\n";
                return 64;
            }
            return run_quantum_casimir(qc_s, qc_m, qc_cutoff, qc_out);
        }
        if (qk->parsed()) {
            if (qk_cutoff < 4) {
                std::cerr << "quantum-check: --cutoff must be at least 4\n";
                return 64;
            }
            return run_quantum_check(qk_cutoff, qk_faces, qk_boundary);
        }
    } catch (const not_closed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const zero_total_area& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const degenerate_null_sum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}
