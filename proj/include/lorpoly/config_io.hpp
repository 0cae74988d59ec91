#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lorpoly/errors.hpp"
#include "lorpoly/polyhedron.hpp"

namespace lorpoly {

struct ConfigFile {
    int version = 1;
    Configuration pairs;
};

// 17 significant digits round-trip IEEE doubles exactly.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Writes are atomic: the content lands in a sibling temp file first and is
// renamed over the target.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw error("write_text_atomic: cannot open " + tmp);
        out << content;
        if (!out) throw error("write_text_atomic: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

// Hand-rolled emitter with fixed key order and fixed float formatting, so a
// given configuration always produces identical bytes.
inline std::string config_to_json(const ConfigFile& cfg) {
    std::ostringstream out;
    out << "{\n  \"version\": " << cfg.version << ",\n  \"pairs\": [\n";
    for (std::size_t i = 0; i < cfg.pairs.size(); ++i) {
        const SpinorPair& p = cfg.pairs[i];
        out << "    {\"z\": [" << format_double(p.z.real()) << ", " << format_double(p.z.imag())
            << "], \"w\": [" << format_double(p.w.real()) << ", " << format_double(p.w.imag())
            << "]}";
        if (i + 1 < cfg.pairs.size()) out << ",";
        out << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

inline void write_config(const std::string& path, const ConfigFile& cfg) {
    if (cfg.pairs.empty()) throw bad_size("write_config: need at least one pair");
    write_text_atomic(path, config_to_json(cfg));
}

inline ConfigFile read_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("read_config: cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("read_config: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("version") || !j.contains("pairs")) {
        throw error("read_config: expected an object with version and pairs");
    }
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
        throw error("read_config: unsupported version");
    }
    const auto& pairs = j["pairs"];
    if (!pairs.is_array() || pairs.empty()) {
        throw error("read_config: pairs must be a non-empty array");
    }
    ConfigFile cfg;
    cfg.pairs.reserve(pairs.size());
    for (const auto& item : pairs) {
        if (!item.is_object() || !item.contains("z") || !item.contains("w")) {
            throw error("read_config: each pair needs z and w");
        }
        const auto& z = item["z"];
        const auto& w = item["w"];
        if (!z.is_array() || z.size() != 2 || !w.is_array() || w.size() != 2) {
            throw error("read_config: z and w must be [re, im] arrays");
        }
        const double zr = z[0].get<double>();
        const double zi = z[1].get<double>();
        const double wr = w[0].get<double>();
        const double wi = w[1].get<double>();
        if (!std::isfinite(zr) || !std::isfinite(zi) || !std::isfinite(wr) ||
            !std::isfinite(wi)) {
            throw error("read_config: non-finite number");
        }
        cfg.pairs.push_back({cplx{zr, zi}, cplx{wr, wi}});
    }
    return cfg;
}

inline std::string matrix_to_csv(const Eigen::MatrixXd& m) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace lorpoly
