#pragma once

#include "cyclocode/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclocode {

/// A cyclic code with parity-check polynomial h_{a1}(x) or h_{a1}(x)h_{a2}(x).
///
/// Exponents are stored reduced into [0, q^k - 2]. `a` is the exponent that
/// attains the length and `lambda` is defined whenever `a` is even.
struct CodeSpec {
    FieldParams params;
    std::int64_t a1 = 0;
    std::optional<std::int64_t> a2;
    std::uint64_t n = 0;
    std::int64_t a = 0;
    std::optional<std::int64_t> lambda;
    /// 1 when a2 = a1 + (q^k-1)/3, 2 when a2 = a1 - (q^k-1)/3.
    std::optional<int> epsilon;

    bool reducible() const noexcept { return a2.has_value(); }

    /// Length n = max (q^k-1)/gcd(q^k-1, a_i) with a = a1 on ties. A reducible
    /// spec must satisfy a1 - a2 = +-(q^k-1)/3 (InvalidArgument otherwise).
    static CodeSpec make(const FieldParams& params, std::int64_t a1,
                         std::optional<std::int64_t> a2 = std::nullopt);

    /// Arbitrary exponent pair; length is the lcm of both orders unless given.
    /// An explicit length must annihilate both exponents.
    static CodeSpec general(const FieldParams& params, std::int64_t a1, std::int64_t a2,
                            std::optional<std::uint64_t> length = std::nullopt);

    /// Irreducible code C_(e) taken at the parent's length, e one of its exponents.
    static CodeSpec component(const CodeSpec& parent, std::int64_t exponent);
};

struct WeightEntry {
    std::uint64_t weight = 0;
    std::uint64_t frequency = 0;
    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Weight enumerator as (weight, frequency) rows sorted by weight.
class WeightDistribution {
public:
    WeightDistribution() = default;
    WeightDistribution(std::initializer_list<WeightEntry> rows);

    /// histogram[w] = number of codewords of weight w; zero rows dropped.
    static WeightDistribution from_histogram(std::span<const std::uint64_t> histogram);

    /// Adds to an existing row of equal weight.
    void add(std::uint64_t weight, std::uint64_t frequency);

    const std::vector<WeightEntry>& entries() const noexcept { return entries_; }
    std::uint64_t total() const noexcept;
    std::uint64_t frequency(std::uint64_t weight) const noexcept;
    /// sum of A_w * w
    std::uint64_t first_moment() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }

    /// "1 + 72z^12 + 72z^16 + ..."
    std::string to_polynomial() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::vector<WeightEntry> entries_;
};

/// (Tr_{F_{q^k}/F_q}(alpha gamma^{a1 i} + beta gamma^{a2 i}))_{i<n} as F_q
/// symbols (see Field::subfield_symbol). beta is ignored for irreducible specs.
std::vector<std::uint32_t> codeword(const Field& field, const CodeSpec& spec, FieldElement alpha,
                                    FieldElement beta);

std::uint64_t hamming_weight(std::span<const std::uint32_t> word) noexcept;

/// Z(alpha, beta): number of zero coordinates.
std::uint64_t z_count(const Field& field, const CodeSpec& spec, FieldElement alpha,
                      FieldElement beta);

std::vector<std::uint32_t> cyclic_shift_left(std::span<const std::uint32_t> word);

struct EnumerationOptions {
    /// Cap on (alpha, beta) pairs visited.
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;
    /// Visit one representative per F_q^* scaling orbit and weight it by q-1.
    /// Same result as the full sweep, q-1 times fewer pairs.
    bool projective = false;
};

/// Exact weight enumerator by visiting every (alpha, beta) (or every alpha for
/// irreducible specs), row-major in (log alpha, log beta) with zero first.
WeightDistribution weight_distribution_bruteforce(const Field& field, const CodeSpec& spec,
                                                  const EnumerationOptions& options = {});

/// Number of (alpha, beta) pairs the enumeration would visit.
std::uint64_t enumeration_cost(const FieldParams& params, const CodeSpec& spec, bool projective);

/// Weights of `samples` codewords with uniformly drawn (alpha, beta). Never
/// used to estimate frequencies.
std::vector<std::uint64_t> sample_weights(const Field& field, const CodeSpec& spec,
                                          std::uint64_t samples, std::uint64_t seed);

/// Number of distinct codewords over all (alpha, beta), by hashing every
/// word. EnumerationBudgetExceeded when over the pair budget or when the set
/// would exceed kDistinctSetBytes.
inline constexpr std::uint64_t kDistinctSetBytes = std::uint64_t{1} << 28;
std::uint64_t count_distinct_codewords(const Field& field, const CodeSpec& spec,
                                       const EnumerationOptions& options = {});

/// F_q-rank of the generator rows codeword(gamma^j, 0), codeword(0, gamma^j),
/// j < k; the code has q^rank words.
std::uint32_t codeword_rank(const Field& field, const CodeSpec& spec);

/// Element with table index idx in enumeration order: 0 is zero, idx >= 1 is
/// gamma^{idx-1}.
inline FieldElement element_at(std::uint64_t idx) noexcept {
    return idx == 0 ? FieldElement::zero()
                    : FieldElement::from_log(static_cast<std::uint32_t>(idx - 1));
}

}  // namespace cyclocode
