#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclocode {

/// Largest field the table representation will build (2^22 elements).
inline constexpr std::uint64_t kTableBudget = std::uint64_t{1} << 22;

/// Shape of F_{q^k} with q = p^t.
struct FieldParams {
    std::uint64_t p = 0;
    std::uint32_t t = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;      // p^t
    std::uint64_t order = 0;  // q^k
    std::uint64_t delta = 0;  // (q^k - 1) / (q - 1)

    /// Validates p prime, t,k >= 1 and p^{tk} within the table budget.
    static FieldParams make(std::uint64_t p, std::uint32_t t, std::uint32_t k);

    std::uint32_t degree() const noexcept { return t * k; }
    std::uint64_t group_order() const noexcept { return order - 1; }

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Zero, or gamma^log with log in [0, q^k - 2]. One representation per element.
class FieldElement {
public:
    static constexpr std::uint32_t kZeroTag = UINT32_MAX;

    constexpr FieldElement() noexcept = default;
    static constexpr FieldElement zero() noexcept { return FieldElement{}; }
    static constexpr FieldElement from_log(std::uint32_t log) noexcept { return FieldElement{log}; }

    constexpr bool is_zero() const noexcept { return tag_ == kZeroTag; }
    constexpr std::uint32_t log() const noexcept { return tag_; }

    friend constexpr auto operator<=>(FieldElement, FieldElement) noexcept = default;

private:
    constexpr explicit FieldElement(std::uint32_t tag) noexcept : tag_(tag) {}
    std::uint32_t tag_ = kZeroTag;
};

/// Monic polynomial over F_p, constant term first.
using PrimeFieldPoly = std::vector<std::uint32_t>;

/// Parses "3,1,1" (constant term first) into a coefficient list.
PrimeFieldPoly parse_coefficient_list(std::string_view text);

/// Immutable finite field F_{q^k} with a fixed primitive element gamma.
///
/// Elements are stored as discrete logs; addition goes through a Zech table.
/// The polynomial-basis "vector" index of an element is sum c_i p^i where
/// c_i is the coefficient of x^i modulo the defining polynomial. Copies share
/// the tables.
class Field {
public:
    /// Without an override the modulus is the lexicographically smallest monic
    /// primitive polynomial of degree t*k (coefficients compared constant term
    /// first) and gamma is the class of x.
    static Field build(std::uint64_t p, std::uint32_t t, std::uint32_t k,
                       const std::optional<PrimeFieldPoly>& modulus_override = std::nullopt);

    const FieldParams& params() const noexcept { return tables_->params; }
    const PrimeFieldPoly& modulus() const noexcept { return tables_->modulus; }
    std::uint32_t group_order() const noexcept { return tables_->group_order; }
    std::uint64_t size() const noexcept { return tables_->params.order; }

    FieldElement zero() const noexcept { return FieldElement::zero(); }
    FieldElement one() const noexcept { return FieldElement::from_log(0); }
    FieldElement gamma() const noexcept;
    /// gamma^e with e reduced modulo q^k - 1.
    FieldElement gamma_pow(std::int64_t e) const noexcept;

    FieldElement add(FieldElement x, FieldElement y) const noexcept;
    FieldElement sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }
    FieldElement neg(FieldElement x) const noexcept;
    FieldElement mul(FieldElement x, FieldElement y) const noexcept;
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    /// Negative exponents are allowed for nonzero x.
    FieldElement pow(FieldElement x, std::int64_t e) const;

    FieldElement from_vector(std::uint32_t v) const;
    std::uint32_t to_vector(FieldElement x) const noexcept;
    /// Embeds c in F_p (0 <= c < p).
    FieldElement from_prime_field(std::uint32_t c) const { return from_vector(c); }

    /// Tr_{F_{q^k}/F_q}(x); lies in the subfield F_q.
    FieldElement trace_relative(FieldElement x) const noexcept;
    /// Tr_{F_{q^k}/F_p}(x) as an integer in [0, p-1].
    std::uint32_t trace_absolute(FieldElement x) const noexcept;

    /// Membership in F_q = {0} u <gamma^delta>.
    bool in_subfield(FieldElement x) const noexcept;
    /// Symbol of an F_q element: 0 for zero, 1 + log/delta otherwise.
    std::uint32_t subfield_symbol(FieldElement x) const;
    FieldElement from_subfield_symbol(std::uint32_t s) const;

    /// Hot-loop tables indexed by discrete log L in [0, q^k - 2].
    /// Subfield symbol of Tr_{F_{q^k}/F_q}(gamma^L).
    std::span<const std::uint32_t> relative_trace_symbols() const noexcept {
        return tables_->rel_trace_symbol;
    }
    /// Subfield symbol of -Tr_{F_{q^k}/F_q}(gamma^L).
    std::span<const std::uint32_t> negated_relative_trace_symbols() const noexcept {
        return tables_->neg_rel_trace_symbol;
    }
    std::span<const std::uint32_t> absolute_trace_by_log() const noexcept {
        return tables_->abs_trace;
    }

    /// Human-readable element: "0", or "g^L".
    std::string to_string(FieldElement x) const;

private:
    struct Tables {
        FieldParams params;
        PrimeFieldPoly modulus;
        std::uint32_t group_order = 0;
        std::uint32_t minus_one_log = 0;
        std::vector<std::uint32_t> antilog;  // log -> vector index
        std::vector<std::uint32_t> log;      // vector index -> log (zero tag at 0)
        std::vector<std::uint32_t> zech;     // n -> log(1 + gamma^n) or zero tag
        std::vector<std::uint32_t> rel_trace;  // log -> element tag of relative trace
        std::vector<std::uint32_t> rel_trace_symbol;
        std::vector<std::uint32_t> neg_rel_trace_symbol;
        std::vector<std::uint32_t> abs_trace;
    };

    explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

    std::shared_ptr<const Tables> tables_;
};

/// Default modulus search, exposed for tests and reports.
PrimeFieldPoly smallest_primitive_polynomial(std::uint64_t p, std::uint32_t degree);

bool is_irreducible(const PrimeFieldPoly& f, std::uint64_t p);
bool is_primitive(const PrimeFieldPoly& f, std::uint64_t p);

}  // namespace cyclocode
