#include "cyclocode/code.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"
#include "cyclocode/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace cyclocode {

namespace {

std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t n) {
    return n / std::gcd(n, static_cast<std::uint64_t>(a));
}

void fill_derived(CodeSpec& spec) {
    const auto N = static_cast<std::int64_t>(spec.params.group_order());
    const auto qm1 = static_cast<std::int64_t>(spec.params.q - 1);
    if (spec.a % 2 == 0) spec.lambda = qm1 / std::gcd(qm1, spec.a / 2);
    if (spec.a2 && N % 3 == 0) {
        const std::int64_t d = mod_normalize(*spec.a2 - spec.a1, N);
        if (d == N / 3) spec.epsilon = 1;
        if (d == 2 * N / 3) spec.epsilon = 2;
    }
}

/// Table-driven evaluation of codeword zero patterns. For a fixed alpha the
/// coordinate i vanishes iff Tr(beta gamma^{a2 i}) = -Tr(alpha gamma^{a1 i}),
/// so the inner loop is one lookup and one compare per coordinate.
class ZeroCounter {
public:
    ZeroCounter(const Field& field, const CodeSpec& spec) : n_(spec.n) {
        const std::uint32_t N = field.group_order();
        off1_.resize(n_);
        off2_.resize(n_);
        const auto e1 = static_cast<std::uint64_t>(spec.a1);
        const auto e2 = static_cast<std::uint64_t>(spec.a2.value_or(0));
        for (std::uint64_t i = 0; i < n_; ++i) {
            off1_[i] = static_cast<std::uint32_t>(e1 * i % N);
            off2_[i] = static_cast<std::uint32_t>(e2 * i % N);
        }
        const auto sym = field.relative_trace_symbols();
        const auto neg = field.negated_relative_trace_symbols();
        sym_.resize(2 * static_cast<std::size_t>(N));
        neg_.resize(2 * static_cast<std::size_t>(N));
        for (std::size_t L = 0; L < 2 * static_cast<std::size_t>(N); ++L) {
            sym_[L] = sym[L % N];
            neg_[L] = neg[L % N];
        }
    }

    /// negA[i] = symbol of -Tr(alpha gamma^{a1 i}).
    void load_alpha(FieldElement alpha, std::vector<std::uint32_t>& neg_a) const {
        neg_a.resize(n_);
        if (alpha.is_zero()) {
            std::fill(neg_a.begin(), neg_a.end(), 0u);
            return;
        }
        const std::uint32_t base = alpha.log();
        for (std::uint64_t i = 0; i < n_; ++i) neg_a[i] = neg_[base + off1_[i]];
    }

    std::uint64_t zeros(const std::vector<std::uint32_t>& neg_a, FieldElement beta) const {
        std::uint64_t z = 0;
        if (beta.is_zero()) {
            for (std::uint64_t i = 0; i < n_; ++i) z += (neg_a[i] == 0);
            return z;
        }
        const std::uint32_t* row = sym_.data() + beta.log();
        for (std::uint64_t i = 0; i < n_; ++i) z += (row[off2_[i]] == neg_a[i]);
        return z;
    }

    std::uint64_t length() const noexcept { return n_; }

private:
    std::uint64_t n_;
    std::vector<std::uint32_t> off1_, off2_;
    std::vector<std::uint32_t> sym_, neg_;
};

struct SweepPlan {
    std::uint64_t alpha_count;   // alpha table indices [0, alpha_count)
    std::uint64_t multiplier;
    bool add_zero_word;
};

SweepPlan plan_sweep(const FieldParams& params, bool projective) {
    if (projective) return {params.delta + 1, params.q - 1, true};
    return {params.order, 1, false};
}

/// Beta index range [first, last) for a given alpha index.
std::pair<std::uint64_t, std::uint64_t> beta_range(const FieldParams& params, const CodeSpec& spec,
                                                   bool projective, std::uint64_t alpha_idx) {
    if (!spec.reducible()) {
        if (projective && alpha_idx == 0) return {0, 0};
        return {0, 1};
    }
    if (projective && alpha_idx == 0) return {1, params.delta + 1};
    return {0, params.order};
}

}  // namespace

CodeSpec CodeSpec::make(const FieldParams& params, std::int64_t a1, std::optional<std::int64_t> a2) {
    const std::uint64_t N = params.group_order();
    const auto Ns = static_cast<std::int64_t>(N);
    CodeSpec spec;
    spec.params = params;
    spec.a1 = mod_normalize(a1, Ns);
    if (a2) {
        spec.a2 = mod_normalize(*a2, Ns);
        const std::int64_t d = mod_normalize(spec.a1 - *spec.a2, Ns);
        if (N % 3 != 0 || (d != Ns / 3 && d != 2 * Ns / 3)) {
            throw Error(ErrorCode::InvalidArgument, "a1 - a2 must be +-(q^k-1)/3");
        }
    }
    const std::uint64_t n1 = multiplicative_order(spec.a1, N);
    const std::uint64_t n2 = spec.a2 ? multiplicative_order(*spec.a2, N) : 0;
    spec.n = std::max(n1, n2);
    spec.a = (spec.n == n1) ? spec.a1 : *spec.a2;
    for (std::int64_t e : {spec.a1, spec.a2.value_or(0)}) {
        if (static_cast<std::uint64_t>(e) * spec.n % N != 0) {
            throw Error(ErrorCode::InvalidArgument,
                        "length " + std::to_string(spec.n) + " does not annihilate exponent " +
                            std::to_string(e));
        }
    }
    fill_derived(spec);
    return spec;
}

CodeSpec CodeSpec::general(const FieldParams& params, std::int64_t a1, std::int64_t a2,
                           std::optional<std::uint64_t> length) {
    const std::uint64_t N = params.group_order();
    const auto Ns = static_cast<std::int64_t>(N);
    CodeSpec spec;
    spec.params = params;
    spec.a1 = mod_normalize(a1, Ns);
    spec.a2 = mod_normalize(a2, Ns);
    const std::uint64_t n1 = multiplicative_order(spec.a1, N);
    const std::uint64_t n2 = multiplicative_order(*spec.a2, N);
    spec.n = length.value_or(std::lcm(n1, n2));
    if (spec.n == 0 || spec.n % n1 != 0 || spec.n % n2 != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "length " + std::to_string(spec.n) + " does not annihilate both exponents");
    }
    spec.a = n1 >= n2 ? spec.a1 : *spec.a2;
    fill_derived(spec);
    return spec;
}

CodeSpec CodeSpec::component(const CodeSpec& parent, std::int64_t exponent) {
    const std::uint64_t N = parent.params.group_order();
    CodeSpec spec;
    spec.params = parent.params;
    spec.a1 = mod_normalize(exponent, static_cast<std::int64_t>(N));
    spec.a = spec.a1;
    spec.n = parent.n;
    if (static_cast<std::uint64_t>(spec.a1) * spec.n % N != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "length " + std::to_string(spec.n) + " does not annihilate exponent " +
                        std::to_string(spec.a1));
    }
    fill_derived(spec);
    return spec;
}

WeightDistribution::WeightDistribution(std::initializer_list<WeightEntry> rows) {
    for (const auto& r : rows) add(r.weight, r.frequency);
}

WeightDistribution WeightDistribution::from_histogram(std::span<const std::uint64_t> histogram) {
    WeightDistribution wd;
    for (std::size_t w = 0; w < histogram.size(); ++w) {
        if (histogram[w] != 0) wd.entries_.push_back({w, histogram[w]});
    }
    return wd;
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t frequency) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), weight,
                               [](const WeightEntry& e, std::uint64_t w) { return e.weight < w; });
    if (it != entries_.end() && it->weight == weight) {
        it->frequency += frequency;
    } else {
        entries_.insert(it, WeightEntry{weight, frequency});
    }
}

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += e.frequency;
    return s;
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const noexcept {
    for (const auto& e : entries_) {
        if (e.weight == weight) return e.frequency;
    }
    return 0;
}

std::uint64_t WeightDistribution::first_moment() const noexcept {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += e.weight * e.frequency;
    return s;
}

std::string WeightDistribution::to_polynomial() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += " + ";
        if (e.weight == 0) {
            out += std::to_string(e.frequency);
            continue;
        }
        if (e.frequency != 1) out += std::to_string(e.frequency);
        out += "z";
        if (e.weight != 1) out += "^" + std::to_string(e.weight);
    }
    return out.empty() ? "0" : out;
}

std::vector<std::uint32_t> codeword(const Field& field, const CodeSpec& spec, FieldElement alpha,
                                    FieldElement beta) {
    std::vector<std::uint32_t> word(spec.n);
    const FieldElement g1 = field.gamma_pow(spec.a1);
    const FieldElement g2 = field.gamma_pow(spec.a2.value_or(0));
    FieldElement u = alpha;
    FieldElement v = spec.reducible() ? beta : field.zero();
    for (std::uint64_t i = 0; i < spec.n; ++i) {
        word[i] = field.subfield_symbol(field.trace_relative(field.add(u, v)));
        u = field.mul(u, g1);
        v = field.mul(v, g2);
    }
    return word;
}

std::uint64_t hamming_weight(std::span<const std::uint32_t> word) noexcept {
    return static_cast<std::uint64_t>(
        std::count_if(word.begin(), word.end(), [](std::uint32_t s) { return s != 0; }));
}

std::uint64_t z_count(const Field& field, const CodeSpec& spec, FieldElement alpha,
                      FieldElement beta) {
    const auto word = codeword(field, spec, alpha, beta);
    return word.size() - hamming_weight(word);
}

std::vector<std::uint32_t> cyclic_shift_left(std::span<const std::uint32_t> word) {
    std::vector<std::uint32_t> out(word.begin(), word.end());
    if (!out.empty()) std::rotate(out.begin(), out.begin() + 1, out.end());
    return out;
}

std::uint64_t enumeration_cost(const FieldParams& params, const CodeSpec& spec, bool projective) {
    const SweepPlan plan = plan_sweep(params, projective);
    std::uint64_t cost = 0;
    // Only alpha index 0 differs from the rest.
    const auto first = beta_range(params, spec, projective, 0);
    cost += first.second - first.first;
    if (plan.alpha_count > 1) {
        const auto rest = beta_range(params, spec, projective, 1);
        cost += (plan.alpha_count - 1) * (rest.second - rest.first);
    }
    return cost;
}

WeightDistribution weight_distribution_bruteforce(const Field& field, const CodeSpec& spec,
                                                  const EnumerationOptions& options) {
    const FieldParams& params = field.params();
    if (!(spec.params == params)) throw Error(ErrorCode::InvalidArgument, "spec/field mismatch");
    const std::uint64_t cost = enumeration_cost(params, spec, options.projective);
    if (cost > options.budget) {
        throw Error(ErrorCode::EnumerationBudgetExceeded,
                    std::to_string(cost) + " pairs exceeds budget " + std::to_string(options.budget));
    }

    const ZeroCounter counter(field, spec);
    const SweepPlan plan = plan_sweep(params, options.projective);
    const std::size_t slots = planned_workers(plan.alpha_count, options.threads);
    std::vector<std::vector<std::uint64_t>> partial(slots, std::vector<std::uint64_t>(spec.n + 1, 0));

    parallel_slices(plan.alpha_count, options.threads,
                    [&](std::size_t begin, std::size_t end, std::size_t slot) {
                        auto& hist = partial[slot];
                        std::vector<std::uint32_t> neg_a;
                        for (std::size_t ai = begin; ai < end; ++ai) {
                            counter.load_alpha(element_at(ai), neg_a);
                            const auto [b0, b1] = beta_range(params, spec, options.projective, ai);
                            for (std::uint64_t bi = b0; bi < b1; ++bi) {
                                ++hist[spec.n - counter.zeros(neg_a, element_at(bi))];
                            }
                        }
                    });

    std::vector<std::uint64_t> hist(spec.n + 1, 0);
    for (const auto& h : partial) {
        for (std::size_t w = 0; w < h.size(); ++w) hist[w] += h[w] * plan.multiplier;
    }
    if (plan.add_zero_word) hist[0] += 1;
    return WeightDistribution::from_histogram(hist);
}

std::vector<std::uint64_t> sample_weights(const Field& field, const CodeSpec& spec,
                                          std::uint64_t samples, std::uint64_t seed) {
    const ZeroCounter counter(field, spec);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, field.size() - 1);
    std::vector<std::uint64_t> weights;
    weights.reserve(samples);
    std::vector<std::uint32_t> neg_a;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const FieldElement alpha = element_at(pick(rng));
        const FieldElement beta = spec.reducible() ? element_at(pick(rng)) : field.zero();
        counter.load_alpha(alpha, neg_a);
        weights.push_back(spec.n - counter.zeros(neg_a, beta));
    }
    return weights;
}

std::uint64_t count_distinct_codewords(const Field& field, const CodeSpec& spec,
                                       const EnumerationOptions& options) {
    const std::uint64_t cost = enumeration_cost(field.params(), spec, false);
    if (cost > options.budget) {
        throw Error(ErrorCode::EnumerationBudgetExceeded,
                    std::to_string(cost) + " pairs exceeds budget " + std::to_string(options.budget));
    }
    if (cost * spec.n * sizeof(std::uint32_t) > kDistinctSetBytes) {
        throw Error(ErrorCode::EnumerationBudgetExceeded, "distinct-codeword set too large");
    }
    std::unordered_set<std::string> seen;
    seen.reserve(cost);
    for (std::uint64_t ai = 0; ai < field.size(); ++ai) {
        const auto [b0, b1] = beta_range(field.params(), spec, false, ai);
        for (std::uint64_t bi = b0; bi < b1; ++bi) {
            const auto word = codeword(field, spec, element_at(ai), element_at(bi));
            seen.emplace(reinterpret_cast<const char*>(word.data()),
                         word.size() * sizeof(std::uint32_t));
        }
    }
    return seen.size();
}

std::uint32_t codeword_rank(const Field& field, const CodeSpec& spec) {
    const std::uint32_t k = field.params().k;
    std::vector<std::vector<FieldElement>> rows;
    for (std::uint32_t j = 0; j < k; ++j) {
        const FieldElement g = field.gamma_pow(j);
        rows.push_back({});
        for (auto s : codeword(field, spec, g, field.zero())) rows.back().push_back(field.from_subfield_symbol(s));
        if (!spec.reducible()) continue;
        rows.push_back({});
        for (auto s : codeword(field, spec, field.zero(), g)) rows.back().push_back(field.from_subfield_symbol(s));
    }
    std::uint32_t rank = 0;
    for (std::uint64_t col = 0; col < spec.n && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [col](const auto& r) { return !r[col].is_zero(); });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[rank]);
        const FieldElement inv = field.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = field.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const FieldElement f = rows[r][col];
            for (std::uint64_t c = 0; c < spec.n; ++c) {
                rows[r][c] = field.sub(rows[r][c], field.mul(f, rows[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace cyclocode
