#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mosaic/catalog.hpp"
#include "mosaic/report.hpp"
#include "mosaic/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "mosaic_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(MOSAIC_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (const char c : s) n += c == '\n';
    return n;
}

} // namespace

TEST_CASE("list shows the seven builtins") {
    const RunResult r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 8); // header + 7 rows
    CHECK(r.out.find("EX1") != std::string::npos);
    CHECK(r.out.find("EX7") != std::string::npos);

    const RunResult j = run_cli("list --format json");
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.size() == 7);
    CHECK(parsed[0]["id"] == "EX1");
    CHECK(parsed[5]["target"] == "1/pi^2");
}

TEST_CASE("verify exits 0 on passing ranges and emits the report") {
    const RunResult r = run_cli("verify --series EX1 --pmax 50 --path both");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("12 primes") != std::string::npos);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["series"] == "EX1");
    CHECK(report["summary"]["all_passed"] == true);
    CHECK(report["primes"].size() == 12);
    CHECK(report["primes"][0]["p"] == 7);
    CHECK(report["primes"][0]["components"][0]["expected"] == "217");
}

TEST_CASE("verify every builtin with the default audited path") {
    const RunResult r = run_cli("verify --series all --pmax 60");
    CHECK(r.exit_code == 0);
    const auto reports = nlohmann::json::parse(r.out);
    CHECK(reports.size() == 7);
    for (const auto& rep : reports) {
        CHECK(rep["summary"]["all_passed"] == true);
        CHECK(rep["path"] == "modular+audit");
    }
}

TEST_CASE("EX6 passes mod p^5 with the path cross-check to 149") {
    const RunResult r = run_cli("verify --series EX6 --pmax 149 --path both");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["summary"]["all_passed"] == true);
    CHECK(report["summary"]["primes"] == 33); // 5..149
}

TEST_CASE("verify respects --mod-power and --format csv") {
    const RunResult r = run_cli("verify --series EX1 --pmax 60 --mod-power 2 --path exact --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("series,prime,radicand,expected,actual,valuation,pass,applicable\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 14); // header + primes 7..59
}

TEST_CASE("strengthening the modulus reports valuations and exits nonzero on failure") {
    // EX1 holds mod p^3 but not mod p^4 at most primes (valuation exactly 3)
    const RunResult r = run_cli("verify --series EX1 --pmax 60 --mod-power 4 --path exact");
    CHECK(r.exit_code == 1);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["summary"]["failed"].get<int>() > 0);
    bool saw_exact_valuation = false;
    for (const auto& prime : report["primes"]) {
        for (const auto& comp : prime["components"]) {
            if (comp["valuation"].is_number() && comp["valuation"] == 3) {
                saw_exact_valuation = true;
                CHECK(comp["pass"] == false);
            }
        }
    }
    CHECK(saw_exact_valuation);
}

TEST_CASE("verify output is byte-identical across jobs") {
    const RunResult one = run_cli("verify --series EX4 --pmax 80 --jobs 1");
    const RunResult four = run_cli("verify --series EX4 --pmax 80 --jobs 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("verify writes --out files") {
    const fs::path out = scratch_dir() / "report.json";
    const RunResult r = run_cli("verify --series EX6 --pmax 40 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const auto report = nlohmann::json::parse(slurp(out));
    CHECK(report["series"] == "EX6");
}

TEST_CASE("evaluate meets documented digit floors") {
    const RunResult r = run_cli("evaluate --series EX1 --terms 50 --digits 300 --require 250");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("matched_digits:") != std::string::npos);

    const RunResult e7 = run_cli("evaluate --series EX7 --terms 40 --digits 60 --require 50");
    CHECK(e7.exit_code == 0);

    // an unmeetable floor exits 1
    const RunResult fail = run_cli("evaluate --series EX3 --terms 15 --digits 60 --require 30");
    CHECK(fail.exit_code == 1);
}

TEST_CASE("evaluate warns about |z| = 1") {
    const RunResult r = run_cli("evaluate --series EX5 --terms 5 --digits 15");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.err.find("|z|") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("verify --series EX9 --pmax 20").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --series EX1 --pmin 100 --pmax 50").exit_code == 2);
    CHECK(run_cli("verify --series EX1 --pmax 20 --path sideways").exit_code == 2);
    CHECK(run_cli("evaluate --series EX1 --terms 0").exit_code == 2);
}

TEST_CASE("user catalogs extend the builtin set") {
    // EX1 under a new id, twice as far from its p_min
    mosaic::SeriesSpec clone = mosaic::builtin("EX1");
    clone.id = "U1";
    const fs::path cat = scratch_dir() / "extra.json";
    {
        std::ofstream out(cat);
        out << mosaic::serialize_catalog({clone});
    }
    const RunResult l = run_cli("list --catalog " + cat.string());
    CHECK(l.exit_code == 0);
    CHECK(count_lines(l.out) == 9);
    CHECK(l.out.find("U1") != std::string::npos);

    const RunResult v = run_cli("verify --series U1 --pmax 60 --catalog " + cat.string());
    CHECK(v.exit_code == 0);

    // re-using a builtin id is rejected
    const fs::path clash = scratch_dir() / "clash.json";
    {
        std::ofstream out(clash);
        out << mosaic::serialize_catalog({mosaic::builtin("EX1")});
    }
    CHECK(run_cli("verify --series EX1 --pmax 20 --catalog " + clash.string()).exit_code == 2);
    CHECK(run_cli("list --catalog /nonexistent.json").exit_code == 2);
}

TEST_CASE("MOSAIC_CATALOG environment variable supplies a default catalog") {
    mosaic::SeriesSpec clone = mosaic::builtin("EX6");
    clone.id = "U6";
    const fs::path cat = scratch_dir() / "env.json";
    {
        std::ofstream out(cat);
        out << mosaic::serialize_catalog({clone});
    }
    // prefix the binary with the env assignment through the shell
    static int counter = 1000;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
    const std::string full = "MOSAIC_CATALOG=" + cat.string() + " " +
                             std::string(MOSAIC_CLI_PATH) + " list > " + out.string();
    REQUIRE(std::system(full.c_str()) == 0);
    CHECK(slurp(out).find("U6") != std::string::npos);
}

TEST_CASE("csv rows match the library writer") {
    mosaic::VerifyOptions options;
    options.path = mosaic::VerifyPath::Both;
    const auto report = mosaic::verify_series(mosaic::builtin("EX2"), 2, 60, options);
    const std::string csv = mosaic::reports_to_csv({report});
    const RunResult r = run_cli("verify --series EX2 --pmax 60 --path both --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == csv);
}
