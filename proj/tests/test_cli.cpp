#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "erasurelab/catalog.hpp"
#include "erasurelab/erasure.hpp"

using namespace erasurelab;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ERASURELAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "erasurelab_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("prob prints exact fractions") {
    RunResult r = run_cli("prob --catalog paper32 --kind amb --p 1/2");
    CHECK(r.status == 0);
    CHECK(strip(r.out) == "5/8");

    r = run_cli("prob --catalog paper32 --kind dec --p 1/2");
    CHECK(strip(r.out) == "11/32");

    r = run_cli("prob --catalog paper32 --kind amb --p 0.5 --float");
    CHECK(std::stod(r.out) == doctest::Approx(0.625));
}

TEST_CASE("export / re-import round trip analyzes identically") {
    fs::path dir = temp_dir();
    fs::path file = dir / "paper32.code";
    RunResult ex = run_cli("catalog --export paper32 --out " + file.string());
    REQUIRE(ex.status == 0);

    RunResult from_catalog = run_cli("analyze --catalog paper32");
    RunResult from_file = run_cli("analyze --code " + file.string());
    REQUIRE(from_catalog.status == 0);
    REQUIRE(from_file.status == 0);

    nlohmann::json a = nlohmann::json::parse(from_catalog.out);
    nlohmann::json b = nlohmann::json::parse(from_file.out);
    a.erase("name");
    b.erase("name");
    CHECK(a == b);
    CHECK(a["hierarchy"] == nlohmann::json({1, 3}));
    CHECK(a["classification"] == "AMDS");
}

TEST_CASE("bounds reports a degenerate interval for an MDS code") {
    RunResult r = run_cli("bounds --catalog parity-3-2");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    for (const auto& row : j["theorem4"]) {
        CHECK(row["dec_lower"] == row["dec_upper"]);
    }
}

TEST_CASE("spectra emits the matrix schema") {
    RunResult r = run_cli("spectra --catalog paper32");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["q"] == 2);
    CHECK(j["support"][1][2] == 3);
    CHECK(j["spectra"][1][2] == 1);
}

TEST_CASE("curve emits CSV whose floats match exact rational evaluation") {
    fs::path dir = temp_dir() / "curves";
    RunResult r = run_cli("curve --catalog paper32 --grid 0:0.5:0.05 --out " + dir.string());
    REQUIRE(r.status == 0);
    std::ifstream in(dir / "paper32.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,P_amb,P_dec");

    CodeAnalysis a = analyze(catalog_entry("paper32").code);
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream ss(line);
        std::string ptxt, ambtxt, dectxt;
        std::getline(ss, ptxt, ',');
        std::getline(ss, ambtxt, ',');
        std::getline(ss, dectxt, ',');
        double p = std::stod(ptxt);
        // the CSV p value is an exact double; evaluate the polynomial there
        mpq_class pq(p);
        double exact_amb = mpq_class(a.q_amb.eval(pq)).get_d();
        double exact_dec = mpq_class(a.q_dec.eval(pq)).get_d();
        if (exact_amb != 0)
            CHECK(std::abs(std::stod(ambtxt) - exact_amb) / exact_amb < 1e-10);
        if (exact_dec != 0)
            CHECK(std::abs(std::stod(dectxt) - exact_dec) / exact_dec < 1e-10);
    }
    CHECK(rows == 11);  // 0, 0.05, ..., 0.5 inclusive
}

TEST_CASE("compare prints the verdict and governing proposition") {
    RunResult r = run_cli("compare parity-3-2 paper32");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["amb"]["order"] == "first");  // d_1 = 2 beats d_1 = 1
    CHECK(j["amb"]["governing"] == "prop9");
    CHECK(j["dec"]["order"] == "first");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("analyze").status == 2);                      // missing input
    CHECK(run_cli("nonsense").status == 2);                     // unknown subcommand
    CHECK(run_cli("analyze --code /does/not/exist").status == 4);
    CHECK(run_cli("prob --catalog paper32 --p 2/1").status == 2);  // p out of range

    // a valid but oversized code trips the enumeration budget
    fs::path big = temp_dir() / "big.code";
    std::ofstream out(big);
    out << "2 25 1\n";
    for (int i = 0; i < 25; ++i) out << (i ? " " : "") << 1;
    out << "\n";
    out.close();
    CHECK(run_cli("analyze --code " + big.string()).status == 3);
}

TEST_CASE("catalog listing mentions every entry") {
    RunResult r = run_cli("catalog");
    REQUIRE(r.status == 0);
    for (const CatalogEntry& e : standard_catalog())
        CHECK(r.out.find(e.name) != std::string::npos);
}
