#include <doctest.h>

#include <cstdlib>
#include <functional>

#include <json.hpp>

#include "epsilon/error.hpp"
#include "epsilon/harness.hpp"

using namespace eps;

namespace {

std::string render(const std::vector<EntryResult> &res) {
    std::string s;
    for (auto &e : res)
        for (auto &r : e.reports) s += report_json(r) + "\n";
    return s;
}

std::string error_code(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("catalog parsing") {
    auto entries = parse_catalog(R"toml(
[field]
p = 7
[sheaf]
expr = "kummer(chi[1], x)"
[[check]]
name = "gos"
[[check]]
name = "milnor"
n = 3
sheaf = "const"
)toml");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].check == "gos");
    CHECK(entries[0].params.get("sheaf") == "kummer(chi[1], x)");
    CHECK(entries[1].params.get("sheaf") == "const");
    CHECK(entries[1].params.get_int("n") == 3);
    CHECK(parse_catalog("").empty());
}

TEST_CASE("catalog errors") {
    try {
        parse_catalog("[field]\np = = 3\n", "bad.toml");
        FAIL("expected a syntax error");
    } catch (const Error &e) {
        CHECK(e.code() == "syntax-error");
        CHECK(std::string(e.what()).find("bad.toml:2:") != std::string::npos);
    }
    CHECK(error_code([] { parse_catalog("[[check]]\nname = \"nope\"\n"); }) == "unknown-check");
    CHECK(error_code([] { parse_catalog("[[check]]\nn = 2\n"); }) == "missing-parameter");
    CHECK(error_code([] { run_catalog(parse_catalog("[[check]]\nname = \"gos\"\n"), RunOptions{}); }) == "missing-parameter");
    CHECK(error_code([] { run_catalog(parse_catalog("[field]\np = 6\n[[check]]\nname = \"gauss-norm\"\n"), RunOptions{}); }) == "not-prime");
    CHECK(is_config_error("bad-point"));
    CHECK_FALSE(is_config_error("degree-inconsistency"));
}

TEST_CASE("wild input under the product formula is skipped") {
    auto res = run_catalog(parse_catalog("[field]\np = 3\n[sheaf]\nexpr = \"as(1, x)\"\n[[check]]\nname = \"product-formula\"\n"), RunOptions{});
    REQUIRE(res.size() == 1);
    REQUIRE(res[0].reports.size() == 1);
    CHECK(res[0].reports[0].skipped);
    CHECK(res[0].reports[0].reason.find("wild") != std::string::npos);
    CHECK(exit_code(res) == 0);
}

TEST_CASE("built-in catalog passes and is deterministic across job counts") {
    auto entries = parse_catalog(builtin_catalog_text("tame-p5"), "tame-p5");
    CHECK(entries.size() >= 15);
    auto a = run_catalog(entries, RunOptions{1, false});
    auto b = run_catalog(entries, RunOptions{3, false});
    CHECK(exit_code(a) == 0);
    CHECK(render(a) == render(b));
}

TEST_CASE("report lines") {
    CheckReport r;
    r.check = "gos";
    r.input = "p=5";
    r.left = "1";
    r.right = "2";
    auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["status"] == "fail");
    CHECK_FALSE(j.contains("seconds"));
    const double t = 0.5;
    CHECK(nlohmann::json::parse(report_json(r, &t))["seconds"] == 0.5);
    CHECK(exit_code({EntryResult{{r}, 0}}) == 1);
}

TEST_CASE("EPSILON_JOBS overrides --jobs") {
    setenv("EPSILON_JOBS", "3", 1);
    CHECK(resolve_jobs(1) == 3);
    setenv("EPSILON_JOBS", "zero", 1);
    CHECK(error_code([] { resolve_jobs(1); }) == "bad-parameter");
    unsetenv("EPSILON_JOBS");
    CHECK(resolve_jobs(4) == 4);
}

TEST_CASE("explain") {
    CheckParams P;
    P.values = {{"p", "5"}, {"sheaf", "kummer(chi[2], x)"}};
    auto lines = explain("product-formula", P);
    int factors = 0;
    for (auto &l : lines) factors += l.find("tame, theta=") != std::string::npos;
    CHECK(factors == 2);
    CHECK(error_code([] { explain("nope", CheckParams{}); }) == "unknown-check");
    CheckParams M;
    M.values = {{"p", "7"}, {"n", "2"}};
    bool gauss = false;
    for (auto &l : explain("milnor", M)) gauss = gauss || l.find("tau(theta-bar)") != std::string::npos;
    CHECK(gauss);
}
