#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/cli.hpp"
#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cyclocode");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    Run r;
    r.code = cyclocode::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("analyze json for the q=13 example") {
    const auto r = run({"analyze", "--q", "13", "--k", "2", "--a1", "8", "--a2", "64", "--verify", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["delta"] == 14);
    CHECK(j["derived"]["n"] == 21);
    CHECK(j["derived"]["a"] == 8);
    CHECK(j["derived"]["lambda"] == 3);
    CHECK(j["verified"] == true);
    CHECK(j["closed_form"] == j["brute_force"]);
    CHECK(j["enumerator"] == "1 + 252z^12 + 252z^14 + 3444z^18 + 10584z^19 + 10584z^20 + 3444z^21");
    CHECK(j["components"][0]["enumerator"] == "1 + 84z^18 + 84z^21");
    for (const char* k : {"params", "conditions", "derived", "closed_form", "brute_force", "verified"}) {
        CHECK(j.contains(k));
    }
}

TEST_CASE("analyze json keeps key order") {
    const auto r = run({"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "-14", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys.size() >= 6);
    CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 6) ==
          std::vector<std::string>{"params", "conditions", "derived", "closed_form", "brute_force", "verified"});
    CHECK(j["brute_force"].is_null());
    CHECK(j["verified"] == false);
}

TEST_CASE("csv output") {
    const auto r = run({"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "-14", "--verify", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "weight,frequency\n0,1\n12,72\n16,72\n18,264\n20,864\n22,864\n24,264\n");
}

TEST_CASE("parameter errors exit with 2 and leave stdout empty") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"analyze", "--q", "4", "--k", "2", "--a1", "1", "--a2", "6"},
             {"analyze", "--q", "6", "--k", "2", "--a1", "1", "--a2", "6"},
             {"analyze", "--q", "7", "--k", "2", "--a1", "3", "--a2", "19"},
             {"analyze", "--q", "7", "--k", "2", "--a1", "2"},
             {"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "34", "--format", "xml"},
             {"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "34", "--verify", "--budget", "10"},
             {"analyze", "--q", "13", "--k", "2", "--h", "4"},
             {"catalog", "--q", "7", "--k", "3"},
             {"verify-lemmas", "--q", "7", "--k", "2", "--sigma", "3"},
             {"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "34", "--verify", "--field-poly", "1,0,1"},
             {"frobnicate"},
             {}}) {
        const auto r = run(args);
        CAPTURE(args.empty() ? std::string("<none>") : args[0]);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
}

TEST_CASE("catalog text") {
    const auto r = run({"catalog", "--q", "7", "--k", "2", "--verify"});
    REQUIRE(r.code == 0);
    for (const char* key : {"(2,18)", "(2,34)", "(18,34)", "(6,10)", "(6,26)", "(10,26)"}) {
        CHECK(r.out.find(key) != std::string::npos);
    }
    CHECK(r.out.find("= 6, catalog size = 6: match") != std::string::npos);
}

TEST_CASE("catalog json") {
    const auto r = run({"catalog", "--q", "13", "--k", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"].size() == 36);
    CHECK(j["count_formula"] == 36);
}

TEST_CASE("reports are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"catalog", "--q", "13", "--k", "2", "--verify", "--format", "json"},
             {"analyze", "--q", "13", "--k", "2", "--a1", "8", "--a2", "64", "--verify", "--threads", "3"},
             {"verify-lemmas", "--q", "7", "--k", "2", "--format", "csv"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("thread count does not change results") {
    const auto one = run({"analyze", "--q", "13", "--k", "2", "--a1", "8", "--a2", "64", "--verify", "--threads", "1", "--format", "json"});
    const auto four = run({"analyze", "--q", "13", "--k", "2", "--a1", "8", "--a2", "64", "--verify", "--threads", "4", "--format", "json"});
    CHECK(one.out == four.out);
}

TEST_CASE("other subcommands") {
    const auto irr = run({"irreducible", "--q", "7", "--k", "2", "--a", "2", "--verify", "--format", "json"});
    CHECK(irr.code == 0);
    CHECK(nlohmann::json::parse(irr.out)["enumerator"] == "1 + 24z^18 + 24z^24");

    const auto lemmas = run({"verify-lemmas", "--q", "7", "--k", "2", "--format", "json"});
    CHECK(lemmas.code == 0);
    CHECK(nlohmann::json::parse(lemmas.out)["verified"] == true);

    const auto probe = run({"probe-conjecture", "--q", "7", "--k", "2", "--format", "json"});
    CHECK(probe.code == 0);
    CHECK(nlohmann::json::parse(probe.out)["catalog_size"] == 6);

    const auto fam = run({"analyze", "--q", "13", "--k", "2", "--h", "3", "--verify"});
    CHECK(fam.code == 0);

    const auto sampled = run({"analyze", "--q", "7", "--k", "4", "--a1", "2", "--a2", "802", "--samples", "300"});
    CHECK(sampled.code == 0);
}

TEST_CASE("modulus override keeps the enumerator") {
    const auto r = run({"analyze", "--q", "7", "--k", "2", "--a1", "2", "--a2", "34", "--verify", "--field-poly", "3,1,1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "weight,frequency\n0,1\n12,72\n16,72\n18,264\n20,864\n22,864\n24,264\n");
}
