#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"

#include "cyclocode/code.hpp"
#include "cyclocode/error.hpp"

#include <set>

using namespace cyclocode;

namespace {

WeightDistribution from_map(const std::map<std::uint64_t, std::uint64_t>& m) {
    WeightDistribution wd;
    for (auto [w, f] : m) wd.add(w, f);
    return wd;
}

}  // namespace

TEST_CASE("spec of the q=13 example") {
    const auto spec = CodeSpec::make(FieldParams::make(13, 1, 2), 8, 64);
    CHECK(spec.n == 21);
    CHECK(spec.a == 8);
    CHECK(spec.lambda == 3);
    CHECK(spec.epsilon == 1);
    CHECK(spec.reducible());
}

TEST_CASE("spec of the q=7 example") {
    const auto spec = CodeSpec::make(FieldParams::make(7, 1, 2), 2, -14);
    CHECK(spec.a2 == 34);
    CHECK(spec.n == 24);
    CHECK(spec.a == 2);
    CHECK(spec.lambda == 6);
    CHECK(spec.epsilon == 2);
}

TEST_CASE("spec validation") {
    const auto fp = FieldParams::make(7, 1, 2);
    CHECK_THROWS_AS(CodeSpec::make(fp, 2, 3), Error);
    const auto irr = CodeSpec::make(fp, 3);
    CHECK(irr.n == 16);
    CHECK_FALSE(irr.lambda.has_value());  // odd exponent
    const auto g = CodeSpec::general(fp, 2, 3);
    CHECK(g.n == 48);
    CHECK_THROWS_AS(CodeSpec::general(fp, 2, 3, 24), Error);
    const auto parent = CodeSpec::make(fp, 2, 34);
    const auto c = CodeSpec::component(parent, 34);
    CHECK(c.n == 24);
    CHECK(c.a1 == 34);
    CHECK_FALSE(c.reducible());
}

TEST_CASE("weight distribution container") {
    WeightDistribution wd{{0, 1}, {18, 24}, {24, 24}};
    wd.add(18, 1);
    CHECK(wd.frequency(18) == 25);
    CHECK(wd.frequency(5) == 0);
    CHECK(wd.total() == 50);
    CHECK(wd.first_moment() == 18 * 25 + 24 * 24);
    CHECK(WeightDistribution{{0, 1}, {18, 24}, {24, 24}}.to_polynomial() == "1 + 24z^18 + 24z^24");
    const std::vector<std::uint64_t> hist{1, 0, 3};
    CHECK(WeightDistribution::from_histogram(hist) == WeightDistribution{{0, 1}, {2, 3}});
    CHECK(WeightDistribution{}.to_polynomial() == "0");
}

TEST_CASE("brute force matches the naive oracle for the q=7 example") {
    const Field F = Field::build(7, 1, 2);
    const auto spec = CodeSpec::make(F.params(), 2, -14);
    const auto O = oracle::NaiveField::first_primitive(7, 2);
    const auto expected = from_map(oracle::weight_distribution(O, 1, 2, 34, 24));
    CHECK(weight_distribution_bruteforce(F, spec) == expected);
}

TEST_CASE("brute force matches the naive oracle over an extension subfield") {
    // q = 9, k = 2; exponents chosen freely, length = lcm of orders
    const Field F = Field::build(3, 2, 2);
    const auto spec = CodeSpec::general(F.params(), 2, 6);
    const auto O = oracle::NaiveField(3, oracle::Poly(F.modulus().begin(), F.modulus().end()));
    CHECK(weight_distribution_bruteforce(F, spec) ==
          from_map(oracle::weight_distribution(O, 2, 2, 6, spec.n)));
}

TEST_CASE("projective and threaded sweeps agree with the full sweep") {
    struct Case {
        unsigned p, t, k;
        std::int64_t a1, a2;
    };
    for (const Case c : {Case{13, 1, 2, 8, 64}, Case{7, 1, 2, 2, 34}, Case{13, 1, 2, 4, 60}, Case{3, 2, 2, 2, 6}}) {
        const Field F = Field::build(c.p, c.t, c.k);
        const auto spec = CodeSpec::general(F.params(), c.a1, c.a2);
        const auto full = weight_distribution_bruteforce(F, spec, {.budget = 1'000'000, .threads = 1});
        CHECK(weight_distribution_bruteforce(F, spec, {.budget = 1'000'000, .threads = 1, .projective = true}) == full);
        CHECK(weight_distribution_bruteforce(F, spec, {.budget = 1'000'000, .threads = 3}) == full);
        CHECK(weight_distribution_bruteforce(F, spec, {.budget = 1'000'000, .threads = 4, .projective = true}) == full);
        const auto irr = CodeSpec::make(F.params(), c.a1);
        CHECK(weight_distribution_bruteforce(F, irr, {.projective = true}) == weight_distribution_bruteforce(F, irr));
    }
}

TEST_CASE("enumeration budget") {
    const Field F = Field::build(13, 1, 2);
    const auto spec = CodeSpec::make(F.params(), 8, 64);
    CHECK(enumeration_cost(F.params(), spec, false) == 28561);
    CHECK(enumeration_cost(F.params(), spec, true) == 15 * 169 - 169 + 14);
    CHECK_THROWS_AS(weight_distribution_bruteforce(F, spec, {.budget = 1000}), Error);
    CHECK_THROWS_AS(count_distinct_codewords(F, spec, {.budget = 1000}), Error);
}

TEST_CASE("codewords") {
    const Field F = Field::build(7, 1, 2);
    const auto spec = CodeSpec::make(F.params(), 2, 34);
    const auto alpha = F.gamma_pow(5);
    const auto beta = F.gamma_pow(11);
    const auto word = codeword(F, spec, alpha, beta);
    REQUIRE(word.size() == 24);
    CHECK(z_count(F, spec, alpha, beta) + hamming_weight(word) == 24);
    const auto shifted = cyclic_shift_left(word);
    CHECK(shifted == codeword(F, spec, F.mul(alpha, F.gamma_pow(2)), F.mul(beta, F.gamma_pow(34))));
    CHECK(hamming_weight(codeword(F, spec, F.zero(), F.zero())) == 0);
    CHECK(cyclic_shift_left(std::vector<std::uint32_t>{1, 2, 3}) == std::vector<std::uint32_t>{2, 3, 1});
}

TEST_CASE("dimension") {
    const Field F = Field::build(7, 1, 2);
    const auto spec = CodeSpec::make(F.params(), 2, 34);
    CHECK(codeword_rank(F, spec) == 4);
    CHECK(count_distinct_codewords(F, spec) == 2401);
    CHECK(codeword_rank(F, CodeSpec::make(F.params(), 2)) == 2);
    // same coset twice: dimension does not grow
    CHECK(codeword_rank(F, CodeSpec::general(F.params(), 2, 14)) == 2);
    CHECK(count_distinct_codewords(F, CodeSpec::general(F.params(), 2, 14)) == 49);
}

TEST_CASE("sampling is reproducible and stays in the support") {
    const Field F = Field::build(13, 1, 2);
    const auto spec = CodeSpec::make(F.params(), 8, 64);
    const auto a = sample_weights(F, spec, 500, 7);
    CHECK(a == sample_weights(F, spec, 500, 7));
    CHECK(a != sample_weights(F, spec, 500, 8));
    const auto full = weight_distribution_bruteforce(F, spec);
    for (auto w : a) REQUIRE(full.frequency(w) > 0);
}
