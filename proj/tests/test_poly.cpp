#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/error.hpp"
#include "cyclocode/poly.hpp"

using namespace cyclocode;

TEST_CASE("cyclotomic cosets") {
    const auto c = cyclotomic_coset(2, 7, 48);
    CHECK(c.representative == 2);
    CHECK(c.members == std::vector<std::uint64_t>{2, 14});
    CHECK(cyclotomic_coset(-14, 7, 48).representative == 34);
    CHECK(cyclotomic_coset(64, 13, 168).members == std::vector<std::uint64_t>{64, 160});
    CHECK(cyclotomic_coset(0, 7, 48).size() == 1);
    CHECK(cyclotomic_coset(8, 7, 48).size() == 1);  // 8 * 6 = 48
    CHECK_THROWS_AS(cyclotomic_coset(1, 7, 0), Error);
}

TEST_CASE("equal parity-check polynomials") {
    CHECK(polys_equal(2, 14, 7, 48));
    CHECK(polys_equal(-14, 46, 7, 48));
    CHECK_FALSE(polys_equal(2, 18, 7, 48));
    CHECK_FALSE(polys_equal(34, 18, 7, 48));
}

TEST_CASE("minimal polynomials vanish at their roots") {
    for (auto [p, t, k] : {std::tuple{7u, 1u, 2u}, {13u, 1u, 2u}, {3u, 2u, 2u}, {7u, 1u, 4u}}) {
        const Field F = Field::build(p, t, k);
        const auto N = static_cast<std::int64_t>(F.group_order());
        for (std::int64_t a : {std::int64_t{1}, std::int64_t{2}, std::int64_t{6}, N / 3, N / 2, N - 1}) {
            const auto h = minimal_polynomial(F, a);
            const auto coset = cyclotomic_coset(a, F.params().q, F.group_order());
            CAPTURE(a);
            REQUIRE(h.degree() == coset.size());
            REQUIRE(h.coefficients.back() == F.one());
            for (auto c : h.coefficients) REQUIRE(F.in_subfield(c));
            for (auto e : coset.members) {
                REQUIRE(evaluate(F, h, F.gamma_pow(-static_cast<std::int64_t>(e))).is_zero());
            }
            // gamma^{-b} for b outside the coset is not a root
            const std::int64_t outside = (static_cast<std::int64_t>(coset.representative) + 1) % N;
            if (!polys_equal(outside, a, F.params().q, F.group_order())) {
                REQUIRE_FALSE(evaluate(F, h, F.gamma_pow(-outside)).is_zero());
            }
        }
    }
}

TEST_CASE("distinct cosets give distinct factors") {
    const Field F = Field::build(7, 1, 2);
    CHECK(minimal_polynomial(F, 2) == minimal_polynomial(F, 14));
    CHECK_FALSE(minimal_polynomial(F, 2) == minimal_polynomial(F, 18));
    CHECK(minimal_polynomial(F, -14) == minimal_polynomial(F, 34));
}

TEST_CASE("rendering") {
    const Field F = Field::build(7, 1, 2);
    const auto h = minimal_polynomial(F, 0);  // x - 1
    CHECK(render_polynomial(F, h) == "6 + x");
    CHECK(render_coefficient_list(F, h) == "6,1");
    const auto h2 = minimal_polynomial(F, 2);
    CHECK(render_polynomial(F, h2).ends_with("x^2"));
    const Field G = Field::build(3, 2, 2);
    const auto g = minimal_polynomial(G, 1);
    CHECK(render_polynomial(G, g).ends_with("x^2"));
}
