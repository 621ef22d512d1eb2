#pragma once

#include "cyclocode/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclocode {

/// {a q^j mod modulus}; a is normalized into [0, modulus) first.
struct CyclotomicCoset {
    std::uint64_t representative = 0;  // smallest member
    std::vector<std::uint64_t> members;  // sorted

    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

CyclotomicCoset cyclotomic_coset(std::int64_t a, std::uint64_t q, std::uint64_t modulus);

/// Polynomial over F_q with coefficients stored as elements of the ambient
/// field F_{q^k} that lie in the subfield. Constant term first.
struct PolyOverFq {
    std::vector<FieldElement> coefficients;

    std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    friend bool operator==(const PolyOverFq&, const PolyOverFq&) = default;
};

/// h_a(x): minimal polynomial of gamma^{-a} over F_q, expanded as
/// prod_j (x - gamma^{-a q^j}).
PolyOverFq minimal_polynomial(const Field& field, std::int64_t a);

/// h_{a1} = h_{a2}, decided on cyclotomic cosets.
bool polys_equal(std::int64_t a1, std::int64_t a2, std::uint64_t q, std::uint64_t modulus);

FieldElement evaluate(const Field& field, const PolyOverFq& poly, FieldElement x);

/// "1 + 3x + x^2". Coefficients render as integers when q is prime and as
/// powers "w^j" of w = gamma^delta otherwise.
std::string render_polynomial(const Field& field, const PolyOverFq& poly);

/// Machine form: comma-separated coefficient symbols, constant term first.
std::string render_coefficient_list(const Field& field, const PolyOverFq& poly);

}  // namespace cyclocode
