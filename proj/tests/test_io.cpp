#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <filesystem>
#include <fstream>
#include <string>

#include "lorpoly/config_io.hpp"
#include "lorpoly/gl_action.hpp"

using namespace lorpoly;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() : dir(std::filesystem::temp_directory_path() / "lorpoly_io_test") {
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("configuration files round-trip bitwise") {
    TempDir tmp;
    const Configuration c = sample_polyhedron(5, 2.0, 314);
    const std::string path = tmp.path("cfg.json");
    write_config(path, ConfigFile{1, c});
    const ConfigFile back = read_config(path);
    REQUIRE(back.version == 1);
    REQUIRE(back.pairs.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        REQUIRE(back.pairs[i].z == c[i].z);
        REQUIRE(back.pairs[i].w == c[i].w);
    }

    // identical content produces identical bytes, and no temp file is left
    const std::string path2 = tmp.path("cfg2.json");
    write_config(path2, ConfigFile{1, c});
    REQUIRE(slurp(path) == slurp(path2));
    REQUIRE_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("seventeen significant digits survive the round trip") {
    REQUIRE(format_double(0.1) == "0.10000000000000001");
    REQUIRE(format_double(1.0) == "1");
    for (double x : {0.1, -2.5e-300, 1.0 / 3.0, 6.02214076e23, -0.0, 42.0}) {
        REQUIRE(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("malformed configuration files are rejected") {
    TempDir tmp;
    REQUIRE_THROWS_AS(read_config(tmp.path("missing.json")), error);

    auto write_raw = [&](const std::string& name, const std::string& body) {
        std::ofstream out(tmp.path(name), std::ios::binary);
        out << body;
    };
    write_raw("bad.json", "{not json");
    REQUIRE_THROWS_AS(read_config(tmp.path("bad.json")), error);

    write_raw("version.json", R"({"version": 2, "pairs": [{"z": [1, 0], "w": [0, 0]}]})");
    REQUIRE_THROWS_AS(read_config(tmp.path("version.json")), error);

    write_raw("empty.json", R"({"version": 1, "pairs": []})");
    REQUIRE_THROWS_AS(read_config(tmp.path("empty.json")), error);

    write_raw("short.json", R"({"version": 1, "pairs": [{"z": [1], "w": [0, 0]}]})");
    REQUIRE_THROWS_AS(read_config(tmp.path("short.json")), error);

    write_raw("missing_w.json", R"({"version": 1, "pairs": [{"z": [1, 0]}]})");
    REQUIRE_THROWS_AS(read_config(tmp.path("missing_w.json")), error);

    REQUIRE_THROWS_AS(write_config(tmp.path("none.json"), ConfigFile{1, {}}), bad_size);
}

TEST_CASE("matrix CSV layout") {
    Eigen::MatrixXd m(2, 2);
    m << 1.5, -2.0, 3.0, 4.0;
    REQUIRE(matrix_to_csv(m) == "1.5,-2\n3,4\n");
}
