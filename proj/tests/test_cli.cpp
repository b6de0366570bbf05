#include "prym/cli.hpp"
#include "prym/config.hpp"
#include "prym/error.hpp"
#include "prym/poly_parser.hpp"
#include "prym/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace prym;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t parse_error_offset(std::string_view text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for '" << std::string(text) << "'");
    return 0;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("parser examples") {
    CHECK(parse_poly("x^8 - x - 1") == RatPoly{-1, -1, 0, 0, 0, 0, 0, 0, 1});
    CHECK(parse_poly("x*(x^5-x-1)") == RatPoly{0, -1, -1, 0, 0, 0, 1});
    CHECK(parse_poly("-x^2 + 1/2") == RatPoly{make_rational(1, 2), 0, -1});
    CHECK(parse_poly("(t+1)^3") == RatPoly{1, 3, 3, 1});
    CHECK(parse_poly(" 3 * y ^ 2 ") == RatPoly{0, 0, 3});
    CHECK(parse_poly("7") == RatPoly{7});
    CHECK(parse_poly("x - x") == RatPoly{});
}

TEST_CASE("parser error offsets") {
    CHECK(parse_error_offset("x^") == 2);
    CHECK(parse_error_offset("") == 0);
    CHECK(parse_error_offset("x + y") == 4);
    CHECK(parse_error_offset("2x") == 1);
    CHECK(parse_error_offset("(x + 1") == 6);
    CHECK(parse_error_offset("1/0") == 1);
    CHECK(parse_error_offset("x ^ 65") == 4);
    CHECK_NOTHROW(parse_poly("x^64"));
}

TEST_CASE("parser round-trips canonical text") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> degree(0, 12), num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& v : c) {
            v = make_rational(num(rng), den(rng));
        }
        RatPoly f(c);
        CHECK(parse_poly(f.to_string()) == f);
        CHECK(parse_poly(f.to_string("z")) == f);
    }
}

TEST_CASE("configuration settings") {
    RunConfig config;
    apply_setting(config, "primes", "40");
    apply_setting(config, "tol", "1e-9");
    apply_setting(config, "format", "md");
    apply_setting(config, "verify", "lemma-key,j");
    CHECK(config.primes == 40);
    CHECK(config.tol == doctest::Approx(1e-9));
    CHECK(config.format == OutputFormat::Markdown);
    CHECK(config.verify.lemma_key);
    CHECK_FALSE(config.verify.frobenius);
    CHECK(config.verify.j_census);
    CHECK_THROWS_AS(apply_setting(config, "colour", "red"), Error);
    CHECK_THROWS_AS(parse_verify_list("lemma-key,bogus"), Error);
    VerificationPlan none = parse_verify_list("none");
    CHECK_FALSE((none.lemma_key || none.frobenius || none.j_census));

    config.primes = 0;
    CHECK_THROWS_AS(config.validate(), Error);
    config.primes = 10;
    config.tol = 2.0;
    CHECK_THROWS_AS(config.validate(), Error);
}

TEST_CASE("flags override the configuration file") {
    std::string path = temp_file("prym_cli_test.conf", "# test\nformat = md\nprimes = 3\n");
    RunResult from_file = run_cli({"--config", path, "certify", "x^8 - x - 1"});
    CHECK(from_file.code == kExitInconclusive);
    CHECK(from_file.out.rfind("#", 0) == 0);

    RunResult overridden = run_cli({"--config", path, "--primes", "500", "--format", "json", "certify", "x^8 - x - 1"});
    CHECK(overridden.code == kExitSuccess);
    Json doc = Json::parse(overridden.out);
    CHECK(doc["result"]["verdict"] == "CertifiedSymmetric");
    std::remove(path.c_str());
}

TEST_CASE("census exit codes and summary") {
    RunResult ok = run_cli({"census", "x^8 - x - 1"});
    REQUIRE(ok.code == kExitSuccess);
    Json doc = Json::parse(ok.out);
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["command"] == "census");
    const Json& summary = doc["result"]["summary"];
    CHECK(summary["total"] == 63);
    CHECK(summary["endZ"] == 28);
    CHECK(summary["endZZ"] == 35);
    CHECK(summary["property_D"] == 63);
    CHECK(doc["result"]["hypothesis"] == "certified");

    RunResult odd = run_cli({"census", "x^7 - x - 1"});
    CHECK(odd.code == kExitError);
    CHECK(odd.out.empty());
    Json err = Json::parse(odd.err);
    CHECK(err["error"]["kind"] == "invalid_argument");

    RunResult small = run_cli({"census", "x^6 - x - 1"});
    CHECK(small.code == kExitInconclusive);
}

TEST_CASE("other subcommands") {
    CHECK(run_cli({"lemma-key", "8", "0,1,2,3", "4,5,6,7"}).code == kExitSuccess);
    CHECK(run_cli({"lemma-key", "8", "0,1", "1,2"}).code == kExitError);
    CHECK(run_cli({"certify", "x^4 + 1"}).code == kExitInconclusive);

    RunResult frob = run_cli({"frobenius", "x^8 - x - 1", "3"});
    REQUIRE(frob.code == kExitSuccess);
    Json doc = Json::parse(frob.out);
    CHECK(doc["result"]["charpoly_coefficients"] == Json({"27", "0", "3", "3", "1", "0", "1"}));
    CHECK(run_cli({"frobenius", "x^8 - x - 1", "11"}).code == kExitError);

    RunResult hom = run_cli({"--twist", "4", "verify-hom", "x^5 - x - 1", "x^5 + 2*x^2 - 3"});
    CHECK(hom.code != kExitError);
}

TEST_CASE("parse failures are reported as JSON") {
    RunResult r = run_cli({"certify", "x^"});
    CHECK(r.code == kExitError);
    Json err = Json::parse(r.err);
    CHECK(err["error"]["kind"] == "parse");
    CHECK(err["error"]["offset"] == 2);

    RunResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == kExitError);
    Json parsed;
    CHECK_NOTHROW(parsed = Json::parse(unknown.err));
    CHECK(parsed.contains("error"));
}

TEST_CASE("output is byte stable") {
    RunResult a = run_cli({"census", "x^8 - x - 1"});
    RunResult b = run_cli({"census", "x^8 - x - 1"});
    CHECK(a.out == b.out);
    RunResult md = run_cli({"--format", "md", "census", "x^8 - x - 1"});
    CHECK(md.code == kExitSuccess);
    CHECK(md.out.find("endZZ") != std::string::npos);
    CHECK(md.out == run_cli({"--format", "md", "census", "x^8 - x - 1"}).out);
}

TEST_CASE("cm table from the data directory") {
    if (const char* dir = std::getenv("PRYM_DATA_DIR")) {
        RunResult r = run_cli({"--cm-table", std::string(dir) + "/cm_table.txt", "j-census", "x^4 - 1"});
        CHECK(r.code == kExitSuccess);
        Json doc = Json::parse(r.out);
        CHECK(doc["result"]["record_count"] == 1);
        CHECK(doc["result"]["records"][0]["cm"] == "MatchesRationalCM(-4)");
    }
    CHECK(run_cli({"--cm-table", "/nonexistent/table", "j-census", "x^4 - 1"}).code == kExitError);
}
