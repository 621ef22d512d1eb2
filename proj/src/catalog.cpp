#include "cyclocode/catalog.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"
#include "cyclocode/poly.hpp"
#include "cyclocode/theorem.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclocode {

namespace {

void require_assumption(std::uint64_t q, std::uint32_t k) {
    if (!main_assumption_holds(q, k)) {
        throw Error(ErrorCode::AssumptionViolated, "main assumption fails for q=" + std::to_string(q) +
                                                       ", k=" + std::to_string(k));
    }
}

}  // namespace

std::string to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::NotRun: return "not-run";
        case VerifyStatus::Passed: return "passed";
        case VerifyStatus::Failed: return "failed";
        case VerifyStatus::Skipped: return "skipped";
    }
    return "unknown";
}

std::vector<CatalogEntry> enumerate_catalog(std::uint64_t q, std::uint32_t k) {
    require_assumption(q, k);
    const std::uint64_t N = *checked_pow(q, k) - 1;
    const auto Ns = static_cast<std::int64_t>(N);
    const auto delta = static_cast<std::int64_t>(N / (q - 1));
    std::map<std::pair<std::int64_t, std::int64_t>, CatalogEntry> found;
    for (std::int64_t a = 0; a < Ns; ++a) {
        if (std::gcd(delta, a) != 2) continue;
        for (std::int64_t partner : {a + Ns / 3, a - Ns / 3}) {
            const ConditionsReport report = check_conditions(q, k, a, partner);
            if (!report.all_pass()) continue;
            const auto r1 = static_cast<std::int64_t>(cyclotomic_coset(a, q, N).representative);
            const auto r2 = static_cast<std::int64_t>(cyclotomic_coset(partner, q, N).representative);
            const auto key = std::minmax(r1, r2);
            if (found.contains(key)) continue;
            CatalogEntry e;
            e.rep1 = key.first;
            e.rep2 = key.second;
            e.a1 = report.a1;
            e.a2 = report.a2;
            e.n = report.derived->n;
            e.lambda = *report.derived->lambda;
            e.closed_form = table2_closed(report);
            found.emplace(key, std::move(e));
        }
    }
    std::vector<CatalogEntry> out;
    out.reserve(found.size());
    for (auto& [key, entry] : found) out.push_back(std::move(entry));
    return out;
}

std::uint64_t count_formula(std::uint64_t q, std::uint32_t k) {
    require_assumption(q, k);
    const std::uint64_t delta = (*checked_pow(q, k) - 1) / (q - 1);
    const std::int64_t value = exact_div(static_cast<std::int64_t>(euler_phi(delta / 2) * (q - 1)),
                                         static_cast<std::int64_t>(k), "phi(delta/2)(q-1)/k");
    return static_cast<std::uint64_t>(value);
}

void verify_catalog_entries(const Field& field, std::vector<CatalogEntry>& entries,
                            const EnumerationOptions& options) {
    for (auto& e : entries) {
        const CodeSpec spec = CodeSpec::make(field.params(), e.a1, e.a2);
        if (enumeration_cost(field.params(), spec, options.projective) > options.budget) {
            e.status = VerifyStatus::Skipped;
            continue;
        }
        e.brute_force = weight_distribution_bruteforce(field, spec, options);
        e.status = (*e.brute_force == e.closed_form) ? VerifyStatus::Passed : VerifyStatus::Failed;
    }
}

ProbeReport probe_conjecture(const Field& field, const EnumerationOptions& options) {
    const FieldParams& fp = field.params();
    const auto catalog = enumerate_catalog(fp.q, fp.k);
    const std::uint64_t N = fp.group_order();

    ProbeReport report;
    report.catalog_size = catalog.size();
    std::map<std::uint64_t, WeightDistribution> by_length;
    for (const auto& e : catalog) by_length.emplace(e.n, e.closed_form);

    std::vector<std::int64_t> reps;
    for (std::uint64_t a = 0; a < N; ++a) {
        const auto coset = cyclotomic_coset(static_cast<std::int64_t>(a), fp.q, N);
        if (coset.representative == a && coset.size() == fp.k) reps.push_back(static_cast<std::int64_t>(a));
    }
    auto order_of = [N](std::int64_t a) { return N / std::gcd(N, static_cast<std::uint64_t>(a)); };

    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const std::uint64_t n = std::lcm(order_of(reps[i]), order_of(reps[j]));
            const auto target = by_length.find(n);
            if (target == by_length.end()) continue;
            const bool listed = std::any_of(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) {
                return e.rep1 == reps[i] && e.rep2 == reps[j];
            });
            if (listed) continue;
            ++report.candidates;
            const CodeSpec spec = CodeSpec::general(fp, reps[i], reps[j]);
            if (enumeration_cost(fp, spec, options.projective) > options.budget) {
                ++report.skipped;
                continue;
            }
            ++report.enumerated;
            WeightDistribution wd = weight_distribution_bruteforce(field, spec, options);
            if (wd == target->second) report.matches.push_back({reps[i], reps[j], n, std::move(wd)});
        }
    }
    return report;
}

}  // namespace cyclocode
