#pragma once

#include "cyclocode/code.hpp"
#include "cyclocode/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclocode {

enum class VerifyStatus { NotRun, Passed, Failed, Skipped };

std::string to_string(VerifyStatus status);

/// One reducible code of the family, keyed by its unordered pair of
/// cyclotomic cosets.
struct CatalogEntry {
    std::int64_t rep1 = 0;  // rep1 < rep2, minimal coset representatives
    std::int64_t rep2 = 0;
    std::int64_t a1 = 0;    // exponent pair as first met in the sweep
    std::int64_t a2 = 0;
    std::uint64_t n = 0;
    std::int64_t lambda = 0;
    WeightDistribution closed_form;
    VerifyStatus status = VerifyStatus::NotRun;
    std::optional<WeightDistribution> brute_force;
};

/// Sweeps a in [0, q^k-2] with gcd(delta, a) = 2, pairs with a +- (q^k-1)/3,
/// keeps pairs whose conditions hold. Sorted by (rep1, rep2).
/// AssumptionViolated unless the main assumption holds.
std::vector<CatalogEntry> enumerate_catalog(std::uint64_t q, std::uint32_t k);

/// phi(delta/2) (q-1) / k. AssumptionViolated unless the main assumption holds.
std::uint64_t count_formula(std::uint64_t q, std::uint32_t k);

/// Brute-forces each entry against its closed form. Entries over the
/// enumeration budget are marked Skipped.
void verify_catalog_entries(const Field& field, std::vector<CatalogEntry>& entries,
                            const EnumerationOptions& options);

struct ProbeCandidate {
    std::int64_t rep1 = 0;
    std::int64_t rep2 = 0;
    std::uint64_t n = 0;
    WeightDistribution distribution;
};

struct ProbeReport {
    std::uint64_t catalog_size = 0;
    std::uint64_t candidates = 0;   // coset pairs outside the catalog at a catalog length
    std::uint64_t enumerated = 0;
    std::uint64_t skipped = 0;      // over budget
    std::vector<ProbeCandidate> matches;  // outside the catalog, same distribution
};

/// Looks for codes C_(b1,b2) outside the catalog, at a catalog length n and
/// with degree-k factors, whose weight distribution equals the catalog's for
/// that n. Reports only.
ProbeReport probe_conjecture(const Field& field, const EnumerationOptions& options);

}  // namespace cyclocode
