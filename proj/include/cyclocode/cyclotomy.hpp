#pragma once

#include "cyclocode/field.hpp"

#include <cstdint>
#include <optional>
#include <ranges>
#include <vector>

namespace cyclocode {

/// D_i^(m) = gamma^i <gamma^m>, an index-m coset of F*_{q^k}.
class CyclotomicClass {
public:
    CyclotomicClass(std::uint32_t index, std::uint32_t order, std::uint32_t group_order) noexcept
        : index_(index), order_(order), group_order_(group_order) {}

    std::uint32_t index() const noexcept { return index_; }
    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t size() const noexcept { return group_order_ / order_; }

    bool contains(FieldElement x) const noexcept {
        return !x.is_zero() && x.log() % order_ == index_;
    }

    /// gamma^{i + m j} for j = 0 .. size()-1.
    auto members() const {
        return std::views::iota(std::uint32_t{0}, size()) |
               std::views::transform([i = index_, m = order_](std::uint32_t j) {
                   return FieldElement::from_log(i + m * j);
               });
    }

private:
    std::uint32_t index_;
    std::uint32_t order_;
    std::uint32_t group_order_;
};

/// Throws OrderDoesNotDivide unless m | q^k - 1. The index is taken mod m.
CyclotomicClass cyclotomic_class(const Field& field, std::int64_t i, std::uint64_t m);

/// (i,j)^(m) = |(D_i + 1) n D_j| by direct membership testing.
std::uint64_t cyclotomic_number_bruteforce(const Field& field, std::int64_t i, std::int64_t j,
                                           std::uint64_t m);

/// Order-2 cyclotomic numbers from the closed form; requires 4 | q^k - 1.
std::int64_t cyclotomic_number_order2_closed(std::uint64_t q, std::uint32_t k, int i, int j);

/// Exact element of Z[zeta_p]: sum_c counts[c] zeta_p^c, where counts[c] is
/// how many summands had absolute trace c.
struct CyclotomicIntegerSum {
    std::vector<std::int64_t> counts;

    CyclotomicIntegerSum() = default;
    explicit CyclotomicIntegerSum(std::uint64_t p) : counts(p, 0) {}

    CyclotomicIntegerSum& operator+=(const CyclotomicIntegerSum& other);

    /// n_0 - n_1 when all nonzero-trace counts agree; nullopt otherwise.
    std::optional<std::int64_t> reduce() const;

    friend bool operator==(const CyclotomicIntegerSum&, const CyclotomicIntegerSum&) = default;
};

template <std::ranges::input_range R>
CyclotomicIntegerSum character_sum(const Field& field, R&& subset) {
    CyclotomicIntegerSum sum(field.params().p);
    for (FieldElement x : subset) ++sum.counts[field.trace_absolute(x)];
    return sum;
}

struct GaussianPeriods {
    std::int64_t eta0 = 0;
    std::int64_t eta1 = 0;
    friend bool operator==(const GaussianPeriods&, const GaussianPeriods&) = default;
};

/// Closed-form Gaussian periods of order 2. Requires p odd and tk even
/// (OddDegree otherwise).
GaussianPeriods gaussian_periods_closed(std::uint64_t p, std::uint32_t t, std::uint32_t k);

/// Character sums over D_0^(2) and D_1^(2), reduced. nullopt if either sum
/// fails to reduce to a rational integer.
std::optional<GaussianPeriods> gaussian_periods_from_character_sums(const Field& field);

}  // namespace cyclocode
