#pragma once

#include "cyclocode/code.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/field.hpp"
#include "cyclocode/verification.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclocode {

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Quantities fixed by the hypotheses once they hold.
struct DerivedQuantities {
    std::uint64_t n = 0;
    std::int64_t a = 0;
    std::optional<std::int64_t> lambda;
    std::optional<int> epsilon;
    std::uint64_t tau_index = 0;  // (q^k - 1) / 3
};

/// Outcome of checking the main assumption and the reducible-code hypotheses
/// for (q, k, a1, a2). `hypotheses` decide all_pass(); `consequences` are
/// statements implied by the hypotheses and are asserted by the verifiers.
struct ConditionsReport {
    std::uint64_t q = 0;
    std::uint32_t k = 0;
    std::uint64_t p = 0;
    std::uint32_t t = 0;
    std::uint64_t delta = 0;
    std::int64_t a1 = 0;  // normalized
    std::int64_t a2 = 0;  // normalized
    std::vector<ConditionCheck> hypotheses;
    std::vector<ConditionCheck> consequences;
    std::optional<DerivedQuantities> derived;  // present iff all_pass()
    bool semiprimitive_a1 = false;
    bool semiprimitive_a2 = false;

    bool all_pass() const noexcept;
    bool consequences_hold() const noexcept;
    std::uint64_t order() const noexcept;  // q^k
};

/// Main assumption on (q, k): 3 | q^k - 1, 2 | delta and 3 does not divide delta.
/// Fails (without throwing) when q is not a prime power.
bool main_assumption_holds(std::uint64_t q, std::uint32_t k) noexcept;

/// Evaluates every hypothesis; never throws on bad parameters.
ConditionsReport check_conditions(std::uint64_t q, std::uint32_t k, std::int64_t a1, std::int64_t a2);

/// Hypotheses for a single semiprimitive code C_(a) at its own length:
/// q odd prime power, 2 | delta, gcd(delta, a) = 2. derived.a = a.
ConditionsReport check_irreducible_conditions(std::uint64_t q, std::uint32_t k, std::int64_t a);

/// u >= 2 and -1 is a power of p modulo u.
bool is_semiprimitive_modulus(std::uint64_t p, std::uint64_t u) noexcept;

VerificationRecord lemma3_verify(std::uint64_t q, std::uint32_t k, std::int64_t a1, std::int64_t a2);

/// Multiset {x y : x in D_i^(6(q-1)/lambda), y in F_q^*} against (lambda/3) * D_i^(2).
VerificationRecord lemma4_verify(const Field& field, std::int64_t lambda, std::int64_t i);

/// Every lambda | q-1 with 3 | lambda and gcd(delta, 2(q-1)/lambda) = 2.
std::vector<std::int64_t> lemma4_admissible_lambdas(const FieldParams& params);

struct SetPartitionCensus {
    std::int64_t sigma = 1;
    std::array<std::array<std::uint64_t, 2>, 3> e{};  // |E_{i,j}|
    std::uint64_t g = 0;
    std::array<std::uint64_t, 4> s{};  // |S_l|
    friend bool operator==(const SetPartitionCensus&, const SetPartitionCensus&) = default;
};

/// Which part of F^2 a pair (alpha, beta) falls in, keyed on
/// u_i = alpha + tau^{i sigma} beta.
enum class PairCase { Zero, W0, W1, S0, S1, S2, S3 };

PairCase classify_pair(const Field& field, FieldElement alpha, FieldElement beta, std::int64_t sigma);

/// Exhaustive classification of every nonzero pair into E_{i,j} / G / S_l.
SetPartitionCensus partition_census(const Field& field, std::int64_t sigma);

/// (|S_0|, |S_1|, |S_2|, |S_3|) from the order-2 cyclotomic numbers.
std::array<std::uint64_t, 4> lemma5_closed(std::uint64_t q, std::uint32_t k);

struct ValueEntry {
    std::int64_t value = 0;
    std::uint64_t frequency = 0;
    friend bool operator==(const ValueEntry&, const ValueEntry&) = default;
};

/// (value, frequency) rows sorted by value; equal values merge.
class ValueDistribution {
public:
    void add(std::int64_t value, std::uint64_t frequency);
    const std::vector<ValueEntry>& entries() const noexcept { return entries_; }
    std::uint64_t total() const noexcept;
    friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;

private:
    std::vector<ValueEntry> entries_;
};

/// Case values of sum_{z in D_0^(2)} sum_{i<3} chi(z(alpha + tau^{i sigma} beta)),
/// indexed by PairCase.
std::array<std::int64_t, 7> table3_case_values(std::uint64_t q, std::uint32_t k);
std::array<std::uint64_t, 7> table3_case_frequencies(std::uint64_t q, std::uint32_t k);
ValueDistribution table3_closed(std::uint64_t q, std::uint32_t k);

struct Table3BruteForce {
    ValueDistribution distribution;
    std::uint64_t pairs = 0;
    std::uint64_t case_mismatches = 0;  // pairs whose value differs from their case value
    std::uint64_t unreduced = 0;        // sums that were not rational integers
};

Table3BruteForce table3_bruteforce(const Field& field, std::int64_t sigma);

/// Exact value of the character sum above for one pair.
std::optional<std::int64_t> table3_pair_value(const Field& field, FieldElement alpha,
                                              FieldElement beta, std::int64_t sigma);

WeightDistribution table1_closed(const ConditionsReport& report);
WeightDistribution table2_closed(const ConditionsReport& report);

/// Hypotheses of the h-family: h | q-1, 3 | h (HypothesisViolated otherwise),
/// then reports whether gcd(k, 3(q-1)/h) = 2.
ConditionsReport theorem2_check(std::uint64_t q, std::uint32_t k, std::uint64_t h);
WeightDistribution table4_closed(std::uint64_t q, std::uint32_t k, std::uint64_t h);
/// (a1, a2) = ((q-1)/h, (q-1)/h + (q^k-1)/3).
std::pair<std::int64_t, std::int64_t> theorem2_exponents(std::uint64_t q, std::uint32_t k,
                                                         std::uint64_t h);

/// The h-family conditions imply the reducible-code conditions with lambda = 2h
/// and identical tables.
VerificationRecord theorem3_check(std::uint64_t q, std::uint32_t k, std::uint64_t h);

/// sigma with Z(alpha, beta) = n/q + (lambda/3q) * sum_{z in D_0^(2)} sum_i
/// chi(z(alpha' + tau^{i sigma} beta')), where (alpha', beta') puts the
/// length-attaining exponent first.
std::int64_t delsarte_sigma(const ConditionsReport& report);

/// Z(alpha, beta) from the character-sum identity (exact division checked).
std::int64_t z_from_character_sum(const Field& field, const ConditionsReport& report,
                                  FieldElement alpha, FieldElement beta);

/// Field-level checks for (q, k) under the main assumption.
VerificationRecord lemma1_verify(const Field& field);
VerificationRecord lemma2_verify(const Field& field);
VerificationRecord remark1_verify(const Field& field);
VerificationRecord lemma5_verify(const Field& field, std::int64_t sigma);
VerificationRecord table3_verify(const Field& field, std::int64_t sigma);
/// Frequency total q^{dim}, first-moment identity, cyclic-shift closure on
/// `samples` random codewords, and the distinct-codeword count.
VerificationRecord structural_verify(const Field& field, const CodeSpec& spec,
                                     const WeightDistribution& brute, std::uint64_t samples,
                                     std::uint64_t seed, const EnumerationOptions& options);

/// Z identity against a direct zero count, for every pair.
VerificationRecord delsarte_identity_verify(const Field& field, const ConditionsReport& report);

}  // namespace cyclocode
