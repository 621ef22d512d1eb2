#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/catalog.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"
#include "cyclocode/theorem.hpp"

#include <set>

using namespace cyclocode;

TEST_CASE("catalog for q=7, k=2") {
    const auto entries = enumerate_catalog(7, 2);
    std::set<std::pair<std::int64_t, std::int64_t>> keys;
    for (const auto& e : entries) {
        keys.emplace(e.rep1, e.rep2);
        CHECK(e.n == 24);
        CHECK(e.lambda == 6);
        CHECK(e.status == VerifyStatus::NotRun);
    }
    CHECK(keys == std::set<std::pair<std::int64_t, std::int64_t>>{
                      {2, 18}, {2, 34}, {18, 34}, {6, 10}, {6, 26}, {10, 26}});
    CHECK(count_formula(7, 2) == 6);
}

TEST_CASE("catalog for q=13, k=2") {
    const auto entries = enumerate_catalog(13, 2);
    CHECK(entries.size() == 36);
    CHECK(count_formula(13, 2) == 36);
    std::set<std::int64_t> lambdas;
    for (const auto& e : entries) {
        lambdas.insert(e.lambda);
        CHECK(e.rep1 < e.rep2);
        CHECK(e.n * 2 == static_cast<std::uint64_t>(e.lambda) * 14);
    }
    CHECK(lambdas == std::set<std::int64_t>{3, 6, 12});
}

TEST_CASE("catalog requires the main assumption") {
    try {
        enumerate_catalog(7, 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AssumptionViolated);
    }
    CHECK_THROWS_AS(count_formula(5, 2), Error);
}

TEST_CASE("catalog is deterministic") {
    const auto a = enumerate_catalog(19, 2);
    const auto b = enumerate_catalog(19, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rep1 == b[i].rep1);
        CHECK(a[i].rep2 == b[i].rep2);
        CHECK(a[i].closed_form == b[i].closed_form);
    }
}

TEST_CASE("catalog verification") {
    const Field F = Field::build(7, 1, 2);
    auto entries = enumerate_catalog(7, 2);
    verify_catalog_entries(F, entries, {});
    for (const auto& e : entries) {
        CHECK(e.status == VerifyStatus::Passed);
        REQUIRE(e.brute_force.has_value());
        CHECK(*e.brute_force == e.closed_form);
    }
    auto limited = enumerate_catalog(7, 2);
    verify_catalog_entries(F, limited, {.budget = 100});
    for (const auto& e : limited) CHECK(e.status == VerifyStatus::Skipped);
    CHECK(to_string(VerifyStatus::Failed) == "failed");
}

TEST_CASE("conjecture probe bookkeeping") {
    const Field F = Field::build(7, 1, 2);
    const auto report = probe_conjecture(F, {});
    CHECK(report.catalog_size == 6);
    CHECK(report.enumerated + report.skipped == report.candidates);
    const auto limited = probe_conjecture(F, {.budget = 10});
    CHECK(limited.enumerated == 0);
    CHECK(limited.skipped == limited.candidates);
}

TEST_CASE("swapping the exponents keeps lambda and the enumerator") {
    for (std::uint64_t q : {7u, 13u, 19u}) {
        for (const auto& e : enumerate_catalog(q, 2)) {
            const auto fwd = check_conditions(q, 2, e.a1, e.a2);
            const auto rev = check_conditions(q, 2, e.a2, e.a1);
            REQUIRE(rev.all_pass());
            CHECK(fwd.derived->lambda == rev.derived->lambda);
            CHECK(table2_closed(fwd) == table2_closed(rev));
        }
    }
}
