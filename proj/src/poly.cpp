#include "cyclocode/poly.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"

#include <algorithm>

namespace cyclocode {

CyclotomicCoset cyclotomic_coset(std::int64_t a, std::uint64_t q, std::uint64_t modulus) {
    if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "coset modulus must be positive");
    const auto m = static_cast<std::int64_t>(modulus);
    const auto start = static_cast<std::uint64_t>(mod_normalize(a, m));
    CyclotomicCoset coset;
    std::uint64_t x = start;
    do {
        coset.members.push_back(x);
        x = mul_mod(x, q, modulus);
    } while (x != start);
    std::sort(coset.members.begin(), coset.members.end());
    coset.members.erase(std::unique(coset.members.begin(), coset.members.end()), coset.members.end());
    coset.representative = coset.members.front();
    return coset;
}

bool polys_equal(std::int64_t a1, std::int64_t a2, std::uint64_t q, std::uint64_t modulus) {
    return cyclotomic_coset(a1, q, modulus).representative ==
           cyclotomic_coset(a2, q, modulus).representative;
}

PolyOverFq minimal_polynomial(const Field& field, std::int64_t a) {
    const FieldParams& fp = field.params();
    const CyclotomicCoset coset = cyclotomic_coset(a, fp.q, fp.group_order());

    // Multiply out prod (x - gamma^{-c}) over the coset members c.
    std::vector<FieldElement> coeffs{field.one()};
    for (std::uint64_t c : coset.members) {
        const FieldElement root = field.gamma_pow(-static_cast<std::int64_t>(c));
        const FieldElement minus_root = field.neg(root);
        std::vector<FieldElement> next(coeffs.size() + 1, field.zero());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], coeffs[i]);
            next[i] = field.add(next[i], field.mul(coeffs[i], minus_root));
        }
        coeffs = std::move(next);
    }
    for (FieldElement c : coeffs) {
        if (!field.in_subfield(c)) {
            throw Error(ErrorCode::CoefficientOutsideSubfield,
                        "h_" + std::to_string(a) + " has coefficient " + field.to_string(c));
        }
    }
    return PolyOverFq{std::move(coeffs)};
}

FieldElement evaluate(const Field& field, const PolyOverFq& poly, FieldElement x) {
    FieldElement acc = field.zero();
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
        acc = field.add(field.mul(acc, x), *it);
    }
    return acc;
}

namespace {

std::string coefficient_text(const Field& field, FieldElement c) {
    if (field.params().t == 1) return std::to_string(field.to_vector(c));
    const std::uint32_t s = field.subfield_symbol(c);
    if (s == 0) return "0";
    if (s == 1) return "1";
    return "w^" + std::to_string(s - 1);
}

}  // namespace

std::string render_polynomial(const Field& field, const PolyOverFq& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.coefficients.size(); ++i) {
        const FieldElement c = poly.coefficients[i];
        if (c.is_zero()) continue;
        std::string term;
        const std::string coef = coefficient_text(field, c);
        if (i == 0) {
            term = coef;
        } else {
            if (coef != "1") term = field.params().t == 1 ? coef : "(" + coef + ")";
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string render_coefficient_list(const Field& field, const PolyOverFq& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.coefficients.size(); ++i) {
        if (i) out += ",";
        out += field.params().t == 1 ? std::to_string(field.to_vector(poly.coefficients[i]))
                                     : std::to_string(field.subfield_symbol(poly.coefficients[i]));
    }
    return out;
}

}  // namespace cyclocode
