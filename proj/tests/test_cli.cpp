#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcov/cli.hpp"

#include <json.hpp>

#include <sstream>

using namespace modcov;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify exit codes")
{
    CHECK(cli({"verify", "--case", "v3", "--p", "5", "--n", "3"}).code == 0);
    CHECK(cli({"verify", "--case", "v3c4", "--n", "3"}).code == 0);
    CHECK(cli({"verify", "--case", "v2v2", "--p", "3", "--n", "2"}).code == 0);
    CHECK(cli({"verify", "--case", "v2v2", "--p", "3", "--n", "4"}).code == 2);
    CHECK(cli({"verify", "--case", "v3", "--p", "2", "--n", "2"}).code == 2);
    CHECK(cli({"verify", "--case", "v3", "--p", "4", "--n", "2"}).code == 2);
    CHECK(cli({"verify", "--case", "v9", "--p", "3", "--n", "2"}).code == 2);
    CHECK(cli({"verify", "--case", "v3", "--p", "3"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("mutation flags")
{
    const Run dropped = cli({"verify", "--case", "v2", "--p", "2", "--n", "2", "--drop", "1"});
    CHECK(dropped.code == 1);
    CHECK(dropped.out.find("verdict: failed: degree 1") != std::string::npos);
    CHECK(cli({"verify", "--case", "v3", "--p", "5", "--n", "3", "--scale", "2:0"}).code == 1);
    CHECK(cli({"verify", "--case", "v3", "--p", "5", "--n", "3", "--scale", "2"}).code == 2);
    CHECK(cli({"verify", "--case", "v3", "--p", "5", "--n", "3", "--scale", "2:9"}).code == 2);
    CHECK(cli({"verify", "--case", "v3", "--p", "5", "--n", "3", "--drop", "99"}).code == 2);
}

TEST_CASE("verify text report")
{
    const Run r = cli({"verify", "--case", "v3", "--p", "3", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("case v3(p=3, n=2)") != std::string::npos);
    CHECK(r.out.find("candidates (4):") != std::string::npos);
    CHECK(r.out.find("freetest: count 4 (r = 4), degree sum 6 (s = 6)") != std::string::npos);
    CHECK(r.out.find("verdict: verified") != std::string::npos);
}

TEST_CASE("certificate JSON")
{
    const Run r = cli({"verify", "--case", "v3", "--p", "5", "--n", "3", "--json", "-"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["version"] == std::string(kVersion));
    CHECK(doc["case"]["kind"] == "v3");
    CHECK(doc["case"]["p"] == 5);
    CHECK(doc["case"]["q"] == 5);
    CHECK(doc["case"]["n"] == 3);
    CHECK(doc["hsop"].size() == 3);
    CHECK(doc["candidates"].size() == 6);
    CHECK(doc["verdict"] == "verified");
    CHECK(doc["freetest"]["r"] == 6);
    CHECK(doc["freetest"]["count"] == 6);
    CHECK(doc["freetest"]["s"] == 15);
    CHECK(doc["freetest"]["degree_sum"] == 15);
    CHECK(doc["secondary_certificate"].is_null());
    for (const auto& rec : doc["per_degree"]) {
        CHECK(rec["ok"] == true);
        CHECK(rec["dim_Md"].get<int>() - rec["dim_AplusMd"].get<int>() == rec["n_cands"].get<int>());
    }

    const auto c4 = nlohmann::json::parse(cli({"verify", "--case", "v3c4", "--n", "1", "--json", "-"}).out);
    CHECK(c4["case"]["q"] == 4);
    CHECK(c4["case"]["k"] == 2);
    REQUIRE(c4["secondary_certificate"].is_object());
    CHECK(c4["secondary_certificate"]["verdict"] == "verified");

    const Run bad = cli({"verify", "--case", "v2", "--p", "2", "--n", "2", "--drop", "0", "--json", "-"});
    CHECK(bad.code == 1);
    const auto fail = nlohmann::json::parse(bad.out);
    CHECK(fail["verdict"] == "failed");
    CHECK_FALSE(fail["reason"].get<std::string>().empty());
}

TEST_CASE("kernel and series")
{
    const Run k = cli({"kernel", "--case", "v3", "--p", "3", "--n", "2", "--degree", "1"});
    CHECK(k.code == 0);
    CHECK(k.out == "x2\nx3\n");
    CHECK(cli({"kernel", "--case", "v3", "--p", "3", "--n", "2", "--degree", "1", "--order", "lex"}).code == 2);

    const Run s = cli({"series", "--case", "v3", "--p", "3", "--n", "2", "--max-degree", "8"});
    CHECK(s.code == 0);
    CHECK(s.out.find("1 + 2t + 4t^2 + 7t^3 + 10t^4") != std::string::npos);
    CHECK(s.out.find("numerator: 1 + t + t^2 + t^3\n") != std::string::npos);
    CHECK(s.out.find("r = 4\ns = 6\n") != std::string::npos);

    const Run v = cli({"series", "--case", "v2v2", "--p", "2", "--n", "2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("r = 4\ns = 4\n") != std::string::npos);
}

TEST_CASE("lemmas subcommand")
{
    const Run r = cli({"lemmas", "--p", "3", "--lemma", "x1-power"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 checked, 0 failures") != std::string::npos);
    CHECK(cli({"lemmas", "--p", "11"}).code == 2);
    CHECK(cli({"lemmas", "--p", "2", "--lemma", "x1-power"}).code == 2);
    CHECK(cli({"lemmas", "--lemma", "nope"}).code == 2);
}

TEST_CASE("suite selection")
{
    const Run r = cli({"suite", "--only", "lemmas"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("suite passed") != std::string::npos);
    CHECK(cli({"suite", "--only", ""}).code == 2);
    CHECK(cli({"suite", "--only", "bogus"}).code == 2);
    CHECK_THROWS_AS(run_suite_section("bogus", 3), std::invalid_argument);

    const Run j = cli({"suite", "--only", "xi,transfer", "--max-p", "3", "--json", "-"});
    CHECK(j.code == 0);

    CHECK_NOTHROW((void)nlohmann::json::parse(j.out));
}

TEST_CASE("version")
{
    const Run r = cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kVersion) + "\n");
}
