#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/field.hpp"

#include <random>

using namespace cyclocode;

namespace {

oracle::NaiveField oracle_for(const Field& F) {
    const auto& mod = F.modulus();
    return oracle::NaiveField(F.params().p, oracle::Poly(mod.begin(), mod.end()));
}

oracle::NaiveField::Elem to_oracle(const Field& F, const oracle::NaiveField& O, FieldElement x) {
    return O.from_index(F.to_vector(x));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("field parameters") {
    const auto fp = FieldParams::make(13, 1, 2);
    CHECK(fp.q == 13);
    CHECK(fp.order == 169);
    CHECK(fp.delta == 14);
    CHECK(fp.degree() == 2);
    const auto f9 = FieldParams::make(3, 2, 2);
    CHECK(f9.q == 9);
    CHECK(f9.order == 81);
    CHECK(f9.delta == 10);
}

TEST_CASE("default modulus is the first primitive polynomial") {
    for (auto [p, m] : {std::pair{2, 3}, {2, 8}, {3, 2}, {3, 4}, {5, 2}, {7, 2}, {13, 2}, {7, 4}, {11, 1}}) {
        const auto expected = oracle::NaiveField::first_primitive(p, m);
        const auto got = smallest_primitive_polynomial(p, m);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(oracle::Poly(got.begin(), got.end()) == expected.modulus());
    }
}

TEST_CASE("irreducibility and primitivity predicates") {
    CHECK(is_irreducible({1, 0, 1}, 3));       // x^2 + 1 over F_3
    CHECK_FALSE(is_primitive({1, 0, 1}, 3));   // x has order 4
    CHECK_FALSE(is_irreducible({1, 0, 1}, 5));  // 2^2 = -1 in F_5
    CHECK(is_primitive({2, 1, 1}, 3));
}

TEST_CASE("arithmetic agrees with polynomial-basis oracle") {
    for (auto [p, t, k] : {std::tuple{7u, 1u, 2u}, {13u, 1u, 2u}, {3u, 2u, 2u}, {2u, 1u, 6u}, {5u, 2u, 2u}}) {
        const Field F = Field::build(p, t, k);
        const auto O = oracle_for(F);
        REQUIRE(O.x_is_primitive());
        CHECK(to_oracle(F, O, F.gamma()) == O.x());
        const std::uint64_t size = F.size();
        const std::uint64_t step = size > 100 ? 7 : 1;
        for (std::uint64_t i = 0; i < size; i += step) {
            for (std::uint64_t j = 0; j < size; j += step) {
                const FieldElement x = F.from_vector(static_cast<std::uint32_t>(i));
                const FieldElement y = F.from_vector(static_cast<std::uint32_t>(j));
                const auto ox = O.from_index(i);
                const auto oy = O.from_index(j);
                REQUIRE(to_oracle(F, O, F.add(x, y)) == O.add(ox, oy));
                REQUIRE(to_oracle(F, O, F.mul(x, y)) == O.mul(ox, oy));
                REQUIRE(to_oracle(F, O, F.sub(x, y)) == O.add(ox, O.neg(oy)));
            }
        }
    }
}

TEST_CASE("vector round trip") {
    const Field F = Field::build(5, 2, 2);
    for (std::uint32_t v = 0; v < F.size(); ++v) REQUIRE(F.to_vector(F.from_vector(v)) == v);
    CHECK(F.from_vector(0).is_zero());
    CHECK(F.from_vector(1) == F.one());
}

TEST_CASE("field laws on random elements") {
    const Field F = Field::build(7, 1, 4);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    for (int trial = 0; trial < 5000; ++trial) {
        const auto a = F.from_vector(pick(rng));
        const auto b = F.from_vector(pick(rng));
        const auto c = F.from_vector(pick(rng));
        REQUIRE(F.add(a, b) == F.add(b, a));
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        REQUIRE(F.add(a, F.neg(a)).is_zero());
        REQUIRE(F.add(a, F.zero()) == a);
        REQUIRE(F.mul(a, F.one()) == a);
        if (!a.is_zero()) {
            REQUIRE(F.mul(a, F.inv(a)) == F.one());
            REQUIRE(F.pow(a, F.group_order()) == F.one());
            REQUIRE(F.pow(a, -1) == F.inv(a));
            REQUIRE(F.div(F.mul(a, b), a) == b);
        }
    }
}

TEST_CASE("characteristic 2 negation is identity") {
    const Field F = Field::build(2, 1, 5);
    for (std::uint32_t v = 0; v < F.size(); ++v) {
        const auto x = F.from_vector(v);
        REQUIRE(F.neg(x) == x);
    }
}

TEST_CASE("traces agree with the oracle") {
    for (auto [p, t, k] : {std::tuple{7u, 1u, 2u}, {3u, 2u, 2u}, {5u, 2u, 2u}, {3u, 1u, 4u}}) {
        const Field F = Field::build(p, t, k);
        const auto O = oracle_for(F);
        for (std::uint32_t v = 0; v < F.size(); ++v) {
            const auto x = F.from_vector(v);
            REQUIRE(F.trace_absolute(x) == O.absolute_trace(O.from_index(v)));
            REQUIRE(to_oracle(F, O, F.trace_relative(x)) == O.trace(O.from_index(v), t));
            REQUIRE(F.in_subfield(F.trace_relative(x)));
        }
    }
}

TEST_CASE("subfield symbols") {
    const Field F = Field::build(3, 2, 2);
    std::uint32_t members = 0;
    for (std::uint32_t v = 0; v < F.size(); ++v) members += F.in_subfield(F.from_vector(v));
    CHECK(members == 9);
    for (std::uint32_t s = 0; s < 9; ++s) {
        const auto x = F.from_subfield_symbol(s);
        REQUIRE(F.in_subfield(x));
        REQUIRE(F.subfield_symbol(x) == s);
    }
    CHECK(F.subfield_symbol(F.zero()) == 0);
    CHECK(code_of([&] { (void)F.subfield_symbol(F.gamma()); }) == ErrorCode::CoefficientOutsideSubfield);
}

TEST_CASE("hot-loop tables match element operations") {
    const Field F = Field::build(13, 1, 2);
    const auto sym = F.relative_trace_symbols();
    const auto neg = F.negated_relative_trace_symbols();
    const auto abs = F.absolute_trace_by_log();
    for (std::uint32_t L = 0; L < F.group_order(); ++L) {
        const auto x = FieldElement::from_log(L);
        REQUIRE(sym[L] == F.subfield_symbol(F.trace_relative(x)));
        REQUIRE(neg[L] == F.subfield_symbol(F.neg(F.trace_relative(x))));
        REQUIRE(abs[L] == F.trace_absolute(x));
    }
}

TEST_CASE("modulus override") {
    const Field def = Field::build(7, 1, 2);
    const Field same = Field::build(7, 1, 2, def.modulus());
    CHECK(same.modulus() == def.modulus());
    CHECK(Field::build(7, 1, 2, parse_coefficient_list("5,2,1")).modulus() == PrimeFieldPoly{5, 2, 1});
    CHECK(code_of([] { Field::build(3, 1, 2, PrimeFieldPoly{1, 0, 1}); }) == ErrorCode::NonPrimitiveModulus);
    CHECK(code_of([] { Field::build(5, 1, 2, PrimeFieldPoly{1, 0, 1}); }) == ErrorCode::ReducibleModulus);
    CHECK(code_of([] { Field::build(5, 1, 2, PrimeFieldPoly{2, 1}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Field::build(5, 1, 2, PrimeFieldPoly{2, 1, 3}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("construction errors") {
    CHECK(code_of([] { Field::build(9, 1, 2); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { Field::build(2, 1, 23); }) == ErrorCode::TableBudgetExceeded);
    CHECK(code_of([] { Field::build(7, 0, 2); }) == ErrorCode::InvalidArgument);
    const Field F = Field::build(7, 1, 2);
    CHECK(code_of([&] { (void)F.inv(F.zero()); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { (void)F.pow(F.zero(), -2); }) == ErrorCode::DivisionByZero);
    CHECK(F.pow(F.zero(), 0) == F.one());
}

TEST_CASE("coefficient list parsing") {
    CHECK(parse_coefficient_list("3,1,1") == PrimeFieldPoly{3, 1, 1});
    CHECK(parse_coefficient_list(" 2, 0 ,1") == PrimeFieldPoly{2, 0, 1});
    CHECK(code_of([] { parse_coefficient_list("3,x"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rendering") {
    const Field F = Field::build(7, 1, 2);
    CHECK(F.to_string(F.gamma_pow(5)) == "g^5");
    CHECK(F.gamma_pow(-1) == F.gamma_pow(47));
}
