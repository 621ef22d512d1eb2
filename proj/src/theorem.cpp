#include "cyclocode/theorem.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"
#include "cyclocode/poly.hpp"

#include <numeric>
#include <random>
#include <string>

namespace cyclocode {

namespace {

/// q^k must stay small enough that (q^k)^2 * 3 fits in int64.
constexpr std::uint64_t kArithmeticLimit = std::uint64_t{1} << 30;

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lambda_of(std::int64_t qm1, std::int64_t a) { return qm1 / gcd64(qm1, a / 2); }

ordered_json weights_json(const WeightDistribution& wd) {
    ordered_json out = ordered_json::array();
    for (const auto& e : wd.entries()) out.push_back({{"weight", e.weight}, {"frequency", e.frequency}});
    return out;
}

ordered_json values_json(const ValueDistribution& vd) {
    ordered_json out = ordered_json::array();
    for (const auto& e : vd.entries()) out.push_back({{"value", e.value}, {"frequency", e.frequency}});
    return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, r = mod_normalize(a, m);
    while (r != 0) {
        const std::int64_t quot = g / r;
        std::int64_t tmp = g - quot * r;
        g = r;
        r = tmp;
        tmp = x - quot * x1;
        x = x1;
        x1 = tmp;
    }
    if (g != 1) throw Error(ErrorCode::InternalConsistency, "exponent is not invertible");
    return mod_normalize(x, m);
}

struct PowersOfQ {
    std::int64_t Q;      // q^k
    std::int64_t upper;  // q^{k-1}
    std::int64_t lower;  // q^{(k-2)/2}
};

PowersOfQ powers_for_tables(std::uint64_t q, std::uint32_t k) {
    if (k < 2 || k % 2 != 0) throw Error(ErrorCode::ConditionsNotMet, "k must be even");
    return PowersOfQ{static_cast<std::int64_t>(*checked_pow(q, k)),
                     static_cast<std::int64_t>(*checked_pow(q, k - 1)),
                     static_cast<std::int64_t>(*checked_pow(q, (k - 2) / 2))};
}

/// Rows of the seven-row table shared by the reducible-code and h-family
/// tables; weights given by the caller.
WeightDistribution seven_row_table(std::int64_t Q, std::int64_t w_low_minus, std::int64_t w_low_plus,
                                   std::int64_t w_mid_minus, std::int64_t w_mid_plus,
                                   std::int64_t w_high_minus, std::int64_t w_high_plus) {
    const std::int64_t f_outer = exact_div(3 * (Q - 1), 2, "3(q^k-1)/2");
    const std::int64_t f_middle = exact_div((Q - 1) * (Q - 5), 8, "(q^k-1)(q^k-5)/8");
    const std::int64_t f_inner = exact_div(3 * (Q - 1) * (Q - 1), 8, "3(q^k-1)^2/8");
    WeightDistribution wd;
    wd.add(0, 1);
    wd.add(w_low_minus, f_outer);
    wd.add(w_low_plus, f_outer);
    wd.add(w_mid_minus, f_middle);
    wd.add(w_high_minus, f_inner);
    wd.add(w_high_plus, f_inner);
    wd.add(w_mid_plus, f_middle);
    return wd;
}

struct PairDetail {
    PairCase kind = PairCase::Zero;
    int e_index = -1;  // i of E_{i,j}
};

class TauPowers {
public:
    TauPowers(const Field& field, std::int64_t sigma) {
        const auto third = static_cast<std::int64_t>(field.group_order() / 3);
        for (int i = 0; i < 3; ++i) pow_[i] = field.gamma_pow(third * i * sigma);
    }
    FieldElement operator[](int i) const noexcept { return pow_[i]; }

private:
    std::array<FieldElement, 3> pow_{};
};

PairDetail classify_detail(const Field& field, const TauPowers& tau, FieldElement alpha,
                           FieldElement beta) {
    if (alpha.is_zero() && beta.is_zero()) return {PairCase::Zero, -1};
    std::array<FieldElement, 3> u{};
    bool has_zero = false;
    for (int i = 0; i < 3; ++i) {
        u[i] = field.add(alpha, field.mul(tau[i], beta));
        has_zero = has_zero || u[i].is_zero();
    }
    if (has_zero) {
        // (alpha, beta) = (alpha, -tau^{i sigma} alpha) for exactly one i.
        int index = -1;
        for (int i = 0; i < 3; ++i) {
            if (beta == field.neg(field.mul(tau[i], alpha))) index = i;
        }
        if (index < 0) throw Error(ErrorCode::InternalConsistency, "E-set index not found");
        const FieldElement diff = field.sub(alpha, field.mul(tau[1], alpha));
        return {diff.log() % 2 == 0 ? PairCase::W0 : PairCase::W1, index};
    }
    int ones = 0;
    for (const auto& x : u) ones += static_cast<int>(x.log() % 2);
    return {static_cast<PairCase>(static_cast<int>(PairCase::S0) + ones), -1};
}

void require_main_assumption(const FieldParams& params) {
    if (!main_assumption_holds(params.q, params.k)) {
        throw Error(ErrorCode::HypothesisViolated,
                    "main assumption fails for q=" + std::to_string(params.q) +
                        ", k=" + std::to_string(params.k));
    }
}

void require_sigma(std::int64_t sigma) {
    if (mod_normalize(sigma, 3) == 0) throw Error(ErrorCode::HypothesisViolated, "3 divides sigma");
}

/// Per-element character-sum histograms over D_0^(2), indexed by enumeration
/// index (0 = zero, idx = log + 1).
std::vector<CyclotomicIntegerSum> d0_histograms(const Field& field) {
    const CyclotomicClass d0 = cyclotomic_class(field, 0, 2);
    std::vector<CyclotomicIntegerSum> cache;
    cache.reserve(field.size());
    for (std::uint64_t idx = 0; idx < field.size(); ++idx) {
        const FieldElement u = element_at(idx);
        CyclotomicIntegerSum s(field.params().p);
        for (FieldElement z : d0.members()) ++s.counts[field.trace_absolute(field.mul(z, u))];
        cache.push_back(std::move(s));
    }
    return cache;
}

std::uint64_t index_of(FieldElement x) noexcept {
    return x.is_zero() ? 0 : std::uint64_t{x.log()} + 1;
}

}  // namespace

bool ConditionsReport::all_pass() const noexcept {
    if (hypotheses.empty()) return false;
    for (const auto& c : hypotheses) {
        if (!c.pass) return false;
    }
    return true;
}

bool ConditionsReport::consequences_hold() const noexcept {
    for (const auto& c : consequences) {
        if (!c.pass) return false;
    }
    return true;
}

std::uint64_t ConditionsReport::order() const noexcept { return delta * (q - 1) + 1; }

bool main_assumption_holds(std::uint64_t q, std::uint32_t k) noexcept {
    if (!as_prime_power(q) || k == 0 || q < 3) return false;
    const auto order = checked_pow(q, k, kArithmeticLimit);
    if (!order) return false;
    const std::uint64_t n = *order - 1;
    const std::uint64_t delta = n / (q - 1);
    return n % 3 == 0 && delta % 2 == 0 && delta % 3 != 0;
}

bool is_semiprimitive_modulus(std::uint64_t p, std::uint64_t u) noexcept {
    if (u < 2) return false;
    if (u == 2) return true;
    std::uint64_t x = p % u;
    for (std::uint64_t j = 1; j <= u; ++j) {
        if (x == u - 1) return true;
        x = x * (p % u) % u;
    }
    return false;
}

ConditionsReport check_conditions(std::uint64_t q, std::uint32_t k, std::int64_t a1, std::int64_t a2) {
    ConditionsReport r;
    r.q = q;
    r.k = k;
    r.a1 = a1;
    r.a2 = a2;
    auto hyp = [&](std::string name, bool pass, std::string witness) {
        r.hypotheses.push_back({std::move(name), pass, std::move(witness)});
        return pass;
    };
    auto con = [&](std::string name, bool pass, std::string witness) {
        r.consequences.push_back({std::move(name), pass, std::move(witness)});
    };

    const auto pp = as_prime_power(q);
    if (!hyp("q is an odd prime power", pp && pp->p != 2,
             pp ? "q = " + str(pp->p) + "^" + str(pp->t) : str(q) + " is not a prime power")) {
        return r;
    }
    r.p = pp->p;
    r.t = pp->t;
    const auto order = k == 0 ? std::nullopt : checked_pow(q, k, kArithmeticLimit);
    if (!hyp("k >= 1 and q^k <= 2^30", order.has_value(), "k = " + str(k))) return r;

    const auto Q = static_cast<std::int64_t>(*order);
    const std::int64_t N = Q - 1;
    const auto qm1 = static_cast<std::int64_t>(q - 1);
    const std::int64_t delta = N / qm1;
    r.delta = static_cast<std::uint64_t>(delta);
    r.a1 = mod_normalize(a1, N);
    r.a2 = mod_normalize(a2, N);

    hyp("3 | q^k-1", N % 3 == 0, "q^k-1 = " + str(N));
    hyp("2 | delta", delta % 2 == 0, "delta = " + str(delta));
    hyp("3 does not divide delta", delta % 3 != 0, "delta = " + str(delta));
    const std::int64_t diff = mod_normalize(r.a1 - r.a2, N);
    hyp("a1 - a2 = +-(q^k-1)/3", N % 3 == 0 && (diff == N / 3 || diff == 2 * N / 3),
        "a1 - a2 = " + str(diff) + " mod " + str(N));

    const std::int64_t n1 = N / gcd64(N, r.a1);
    const std::int64_t n2 = N / gcd64(N, r.a2);
    const std::int64_t n = std::max(n1, n2);
    const std::int64_t a = (n == n1) ? r.a1 : r.a2;
    const std::int64_t g = gcd64(delta, a);
    hyp("gcd(delta, a) = 2", g == 2,
        "a = " + str(a) + ", gcd(" + str(delta) + ", " + str(a) + ") = " + str(g));

    std::optional<std::int64_t> lambda;
    if (a % 2 == 0) lambda = lambda_of(qm1, a);

    if (r.all_pass()) {
        DerivedQuantities d;
        d.n = static_cast<std::uint64_t>(n);
        d.a = a;
        d.lambda = lambda;
        const std::int64_t up = mod_normalize(r.a2 - r.a1, N);
        d.epsilon = (up == N / 3) ? 1 : 2;
        d.tau_index = static_cast<std::uint64_t>(N / 3);
        r.derived = d;
    }

    // Implications of the main assumption.
    con("k even", k % 2 == 0, "k = " + str(k));
    con("q odd and q >= 7", q % 2 == 1 && q >= 7, "q = " + str(q));
    con("3 | q-1", qm1 % 3 == 0, "q-1 = " + str(qm1));
    con("4 | q^k-1", N % 4 == 0, "q^k-1 = " + str(N));
    if (lambda) con("3 | lambda", *lambda % 3 == 0, "lambda = " + str(*lambda));
    con("a1 n = a2 n = 0 mod q^k-1", (r.a1 * n) % N == 0 && (r.a2 * n) % N == 0,
        "n = " + str(n));

    const auto c1 = cyclotomic_coset(r.a1, q, static_cast<std::uint64_t>(N));
    const auto c2 = cyclotomic_coset(r.a2, q, static_cast<std::uint64_t>(N));
    con("deg h_a1 = k", c1.size() == k, "deg = " + str(static_cast<std::int64_t>(c1.size())));
    con("deg h_a2 = k", c2.size() == k, "deg = " + str(static_cast<std::int64_t>(c2.size())));
    con("h_a1 != h_a2", c1.representative != c2.representative,
        "coset reps " + str(static_cast<std::int64_t>(c1.representative)) + ", " +
            str(static_cast<std::int64_t>(c2.representative)));

    const std::int64_t u1 = gcd64(delta, r.a1);
    const std::int64_t u2 = gcd64(delta, r.a2);
    r.semiprimitive_a1 = c1.size() == k && is_semiprimitive_modulus(r.p, static_cast<std::uint64_t>(u1));
    r.semiprimitive_a2 = c2.size() == k && is_semiprimitive_modulus(r.p, static_cast<std::uint64_t>(u2));
    con("C_(a1) semiprimitive", r.semiprimitive_a1, "u = " + str(u1));
    con("C_(a2) semiprimitive", r.semiprimitive_a2, "u = " + str(u2));

    if (n1 == n2 && r.a1 % 2 == 0 && r.a2 % 2 == 0) {
        // Either exponent could have been selected; the tables depend on lambda only.
        const std::int64_t l1 = lambda_of(qm1, r.a1);
        const std::int64_t l2 = lambda_of(qm1, r.a2);
        con("tie in a-selection leaves lambda unchanged", l1 == l2,
            "lambda(a1) = " + str(l1) + ", lambda(a2) = " + str(l2));
    }
    return r;
}

ConditionsReport check_irreducible_conditions(std::uint64_t q, std::uint32_t k, std::int64_t a) {
    ConditionsReport r;
    r.q = q;
    r.k = k;
    r.a1 = a;
    r.a2 = a;
    const auto pp = as_prime_power(q);
    r.hypotheses.push_back({"q is an odd prime power", pp && pp->p != 2,
                            pp ? "q = " + str(pp->p) + "^" + str(pp->t) : str(q) + " is not a prime power"});
    if (!r.hypotheses.back().pass) return r;
    r.p = pp->p;
    r.t = pp->t;
    const auto order = k == 0 ? std::nullopt : checked_pow(q, k, kArithmeticLimit);
    r.hypotheses.push_back({"k >= 1 and q^k <= 2^30", order.has_value(), "k = " + str(k)});
    if (!order) return r;
    const auto N = static_cast<std::int64_t>(*order - 1);
    const auto qm1 = static_cast<std::int64_t>(q - 1);
    const std::int64_t delta = N / qm1;
    r.delta = static_cast<std::uint64_t>(delta);
    r.a1 = r.a2 = mod_normalize(a, N);
    r.hypotheses.push_back({"2 | delta", delta % 2 == 0, "delta = " + str(delta)});
    const std::int64_t g = gcd64(delta, r.a1);
    r.hypotheses.push_back({"gcd(delta, a) = 2", g == 2,
                            "gcd(" + str(delta) + ", " + str(r.a1) + ") = " + str(g)});
    const auto coset = cyclotomic_coset(r.a1, q, static_cast<std::uint64_t>(N));
    r.consequences.push_back({"deg h_a = k", coset.size() == k,
                              "deg = " + str(static_cast<std::int64_t>(coset.size()))});
    r.semiprimitive_a1 = r.semiprimitive_a2 =
        coset.size() == k && is_semiprimitive_modulus(r.p, static_cast<std::uint64_t>(g));
    r.consequences.push_back({"C_(a) semiprimitive", r.semiprimitive_a1, "u = " + str(g)});
    if (r.all_pass()) {
        DerivedQuantities d;
        d.n = static_cast<std::uint64_t>(N / gcd64(N, r.a1));
        d.a = r.a1;
        d.lambda = lambda_of(qm1, r.a1);
        d.tau_index = N % 3 == 0 ? static_cast<std::uint64_t>(N / 3) : 0;
        r.derived = d;
        r.consequences.push_back({"n = lambda delta / 2",
                                  static_cast<std::int64_t>(d.n) * 2 == *d.lambda * delta,
                                  "n = " + str(static_cast<std::int64_t>(d.n))});
    }
    return r;
}

VerificationRecord lemma3_verify(std::uint64_t q, std::uint32_t k, std::int64_t a1, std::int64_t a2) {
    if (!main_assumption_holds(q, k)) throw Error(ErrorCode::HypothesisViolated, "main assumption fails");
    const auto Q = static_cast<std::int64_t>(*checked_pow(q, k));
    const std::int64_t N = Q - 1;
    const auto qm1 = static_cast<std::int64_t>(q - 1);
    const std::int64_t delta = N / qm1;
    const std::int64_t x1 = mod_normalize(a1, N);
    const std::int64_t x2 = mod_normalize(a2, N);
    const std::int64_t diff = mod_normalize(x1 - x2, N);
    if (diff != N / 3 && diff != 2 * N / 3) {
        throw Error(ErrorCode::HypothesisViolated, "a1 - a2 is not +-(q^k-1)/3");
    }

    VerificationRecord rec("lemma3 a1=" + str(x1) + " a2=" + str(x2));
    const std::int64_t g1 = gcd64(delta, x1);
    const std::int64_t g2 = gcd64(delta, x2);
    rec.expect_eq("gcd(delta,a2) = gcd(delta,a1)", g1, g2);
    if (g1 != 2 || g2 != 2) return rec;

    const std::int64_t l1 = lambda_of(qm1, x1);
    const std::int64_t l2 = lambda_of(qm1, x2);
    rec.expect_eq("gcd(q^k-1,a1) = 2(q-1)/lambda_1", 2 * qm1 / l1, gcd64(N, x1));
    rec.expect_eq("gcd(q^k-1,a2) = 2(q-1)/lambda_2", 2 * qm1 / l2, gcd64(N, x2));
    if (l1 % 3 != 0) rec.expect_eq("lambda_2 = 3 lambda_1", 3 * l1, l2);
    if (l2 % 3 != 0) rec.expect_eq("lambda_1 = 3 lambda_2", 3 * l2, l1);

    const ConditionsReport report = check_conditions(q, k, a1, a2);
    rec.expect_true("conditions hold", report.all_pass());
    if (!report.all_pass()) return rec;
    const std::int64_t lambda = *report.derived->lambda;
    rec.expect_true("3 | lambda", lambda % 3 == 0, lambda);
    rec.expect_eq("gcd(delta, 2(q-1)/lambda) = 2", 2, gcd64(delta, 2 * qm1 / lambda));
    rec.expect_eq("n = lambda delta / 2", lambda * delta / 2,
                  static_cast<std::int64_t>(report.derived->n));
    return rec;
}

std::vector<std::int64_t> lemma4_admissible_lambdas(const FieldParams& params) {
    std::vector<std::int64_t> out;
    const auto qm1 = static_cast<std::int64_t>(params.q - 1);
    const auto delta = static_cast<std::int64_t>(params.delta);
    for (std::uint64_t d : divisors(params.q - 1)) {
        const auto lambda = static_cast<std::int64_t>(d);
        if (lambda % 3 == 0 && gcd64(delta, 2 * qm1 / lambda) == 2) out.push_back(lambda);
    }
    return out;
}

VerificationRecord lemma4_verify(const Field& field, std::int64_t lambda, std::int64_t i) {
    const FieldParams& fp = field.params();
    const auto qm1 = static_cast<std::int64_t>(fp.q - 1);
    const auto delta = static_cast<std::int64_t>(fp.delta);
    if (lambda <= 0 || qm1 % lambda != 0 || lambda % 3 != 0 ||
        gcd64(delta, 2 * qm1 / lambda) != 2) {
        throw Error(ErrorCode::HypothesisViolated,
                    "lambda = " + str(lambda) + " is not admissible for q = " + std::to_string(fp.q));
    }
    const std::int64_t m = 6 * qm1 / lambda;
    const std::uint32_t N = field.group_order();
    if (N % m != 0) throw Error(ErrorCode::HypothesisViolated, "6(q-1)/lambda does not divide q^k-1");

    const CyclotomicClass fine = cyclotomic_class(field, i, static_cast<std::uint64_t>(m));
    const CyclotomicClass coarse = cyclotomic_class(field, i, 2);
    std::vector<std::uint32_t> multiplicity(N, 0);
    for (FieldElement x : fine.members()) {
        for (std::int64_t j = 0; j < qm1; ++j) {
            const FieldElement y = FieldElement::from_log(static_cast<std::uint32_t>(j * delta));
            ++multiplicity[field.mul(x, y).log()];
        }
    }

    VerificationRecord rec("lemma4 lambda=" + str(lambda) + " i=" + str(i));
    rec.expect_eq("|D_i^(6(q-1)/lambda)| (q-1) = (lambda/3) |D_i^(2)|",
                  (lambda / 3) * static_cast<std::int64_t>(coarse.size()),
                  static_cast<std::int64_t>(fine.size()) * qm1);
    std::int64_t wrong = 0;
    std::int64_t outside = 0;
    for (std::uint32_t L = 0; L < N; ++L) {
        if (coarse.contains(FieldElement::from_log(L))) {
            wrong += (multiplicity[L] != static_cast<std::uint32_t>(lambda / 3));
        } else {
            outside += (multiplicity[L] != 0);
        }
    }
    rec.expect_eq("elements of D_i^(2) with multiplicity != lambda/3", 0, wrong);
    rec.expect_eq("products outside D_i^(2)", 0, outside);
    return rec;
}

PairCase classify_pair(const Field& field, FieldElement alpha, FieldElement beta, std::int64_t sigma) {
    require_sigma(sigma);
    return classify_detail(field, TauPowers(field, sigma), alpha, beta).kind;
}

SetPartitionCensus partition_census(const Field& field, std::int64_t sigma) {
    require_sigma(sigma);
    require_main_assumption(field.params());
    const TauPowers tau(field, sigma);
    SetPartitionCensus census;
    census.sigma = sigma;
    for (std::uint64_t ai = 0; ai < field.size(); ++ai) {
        for (std::uint64_t bi = 0; bi < field.size(); ++bi) {
            const PairDetail d = classify_detail(field, tau, element_at(ai), element_at(bi));
            switch (d.kind) {
                case PairCase::Zero: break;
                case PairCase::W0: ++census.e[d.e_index][0]; break;
                case PairCase::W1: ++census.e[d.e_index][1]; break;
                default:
                    ++census.g;
                    ++census.s[static_cast<int>(d.kind) - static_cast<int>(PairCase::S0)];
            }
        }
    }
    return census;
}

std::array<std::uint64_t, 4> lemma5_closed(std::uint64_t q, std::uint32_t k) {
    if (!main_assumption_holds(q, k)) throw Error(ErrorCode::HypothesisViolated, "main assumption fails");
    const auto Q = static_cast<std::int64_t>(*checked_pow(q, k));
    if ((Q - 1) % 4 != 0) throw Error(ErrorCode::HypothesisViolated, "4 does not divide q^k-1");
    const std::int64_t c00 = cyclotomic_number_order2_closed(q, k, 0, 0);
    const std::int64_t c01 = cyclotomic_number_order2_closed(q, k, 0, 1);
    const std::int64_t c11 = cyclotomic_number_order2_closed(q, k, 1, 1);
    const std::int64_t s0 = exact_div(Q - 1, 2, "(q^k-1)/2") * c00;
    const std::int64_t s1 = exact_div(3 * (Q - 1), 2, "3(q^k-1)/2") * c01;
    const std::int64_t s2 = exact_div(3 * (Q - 1), 2, "3(q^k-1)/2") * c11;
    const std::int64_t s3 = (Q - 1) * (Q - 2) - (s0 + s1 + s2);
    return {static_cast<std::uint64_t>(s0), static_cast<std::uint64_t>(s1),
            static_cast<std::uint64_t>(s2), static_cast<std::uint64_t>(s3)};
}

void ValueDistribution::add(std::int64_t value, std::uint64_t frequency) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const ValueEntry& e, std::int64_t v) { return e.value < v; });
    if (it != entries_.end() && it->value == value) {
        it->frequency += frequency;
    } else {
        entries_.insert(it, ValueEntry{value, frequency});
    }
}

std::uint64_t ValueDistribution::total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += e.frequency;
    return s;
}

std::array<std::int64_t, 7> table3_case_values(std::uint64_t q, std::uint32_t k) {
    if (!main_assumption_holds(q, k)) throw Error(ErrorCode::HypothesisViolated, "main assumption fails");
    const auto pp = *as_prime_power(q);
    const GaussianPeriods eta = gaussian_periods_closed(pp.p, pp.t, k);
    const auto Q = static_cast<std::int64_t>(*checked_pow(q, k));
    const std::int64_t half = exact_div(Q - 1, 2, "(q^k-1)/2");
    return {3 * half,          half + 2 * eta.eta0, half + 2 * eta.eta1, 3 * eta.eta0,
            -1 + eta.eta0,     -1 + eta.eta1,       3 * eta.eta1};
}

std::array<std::uint64_t, 7> table3_case_frequencies(std::uint64_t q, std::uint32_t k) {
    if (!main_assumption_holds(q, k)) throw Error(ErrorCode::HypothesisViolated, "main assumption fails");
    const auto Q = static_cast<std::int64_t>(*checked_pow(q, k));
    const auto outer = static_cast<std::uint64_t>(exact_div(3 * (Q - 1), 2, "3(q^k-1)/2"));
    const auto middle = static_cast<std::uint64_t>(exact_div((Q - 1) * (Q - 5), 8, "(q^k-1)(q^k-5)/8"));
    const auto inner = static_cast<std::uint64_t>(exact_div(3 * (Q - 1) * (Q - 1), 8, "3(q^k-1)^2/8"));
    return {1, outer, outer, middle, inner, inner, middle};
}

ValueDistribution table3_closed(std::uint64_t q, std::uint32_t k) {
    const auto values = table3_case_values(q, k);
    const auto freqs = table3_case_frequencies(q, k);
    ValueDistribution vd;
    for (std::size_t c = 0; c < values.size(); ++c) vd.add(values[c], freqs[c]);
    return vd;
}

std::optional<std::int64_t> table3_pair_value(const Field& field, FieldElement alpha,
                                              FieldElement beta, std::int64_t sigma) {
    require_sigma(sigma);
    const TauPowers tau(field, sigma);
    const CyclotomicClass d0 = cyclotomic_class(field, 0, 2);
    CyclotomicIntegerSum total(field.params().p);
    for (int i = 0; i < 3; ++i) {
        const FieldElement u = field.add(alpha, field.mul(tau[i], beta));
        for (FieldElement z : d0.members()) ++total.counts[field.trace_absolute(field.mul(z, u))];
    }
    return total.reduce();
}

Table3BruteForce table3_bruteforce(const Field& field, std::int64_t sigma) {
    require_sigma(sigma);
    const FieldParams& fp = field.params();
    require_main_assumption(fp);
    const auto expected = table3_case_values(fp.q, fp.k);
    const TauPowers tau(field, sigma);
    const auto cache = d0_histograms(field);

    Table3BruteForce out;
    CyclotomicIntegerSum total(fp.p);
    for (std::uint64_t ai = 0; ai < field.size(); ++ai) {
        const FieldElement alpha = element_at(ai);
        for (std::uint64_t bi = 0; bi < field.size(); ++bi) {
            const FieldElement beta = element_at(bi);
            std::fill(total.counts.begin(), total.counts.end(), 0);
            for (int i = 0; i < 3; ++i) {
                total += cache[index_of(field.add(alpha, field.mul(tau[i], beta)))];
            }
            ++out.pairs;
            const auto value = total.reduce();
            if (!value) {
                ++out.unreduced;
                continue;
            }
            out.distribution.add(*value, 1);
            const PairCase kind = classify_detail(field, tau, alpha, beta).kind;
            if (*value != expected[static_cast<int>(kind)]) ++out.case_mismatches;
        }
    }
    return out;
}

WeightDistribution table1_closed(const ConditionsReport& report) {
    if (!report.all_pass()) throw Error(ErrorCode::ConditionsNotMet, "conditions do not hold");
    const PowersOfQ pw = powers_for_tables(report.q, report.k);
    const std::int64_t lambda = *report.derived->lambda;
    WeightDistribution wd;
    const std::int64_t f = exact_div(pw.Q - 1, 2, "(q^k-1)/2");
    wd.add(0, 1);
    wd.add(exact_div(lambda * (pw.upper - pw.lower), 2, "Table I weight"), f);
    wd.add(exact_div(lambda * (pw.upper + pw.lower), 2, "Table I weight"), f);
    return wd;
}

WeightDistribution table2_closed(const ConditionsReport& report) {
    if (!report.all_pass()) throw Error(ErrorCode::ConditionsNotMet, "conditions do not hold");
    const PowersOfQ pw = powers_for_tables(report.q, report.k);
    const std::int64_t lambda = *report.derived->lambda;
    return seven_row_table(pw.Q, exact_div(lambda * (pw.upper - pw.lower), 3, "Table II weight"),
                           exact_div(lambda * (pw.upper + pw.lower), 3, "Table II weight"),
                           exact_div(lambda * (pw.upper - pw.lower), 2, "Table II weight"),
                           exact_div(lambda * (pw.upper + pw.lower), 2, "Table II weight"),
                           exact_div(lambda * (3 * pw.upper - pw.lower), 6, "Table II weight"),
                           exact_div(lambda * (3 * pw.upper + pw.lower), 6, "Table II weight"));
}

std::pair<std::int64_t, std::int64_t> theorem2_exponents(std::uint64_t q, std::uint32_t k,
                                                         std::uint64_t h) {
    const auto N = static_cast<std::int64_t>(*checked_pow(q, k) - 1);
    const auto a1 = static_cast<std::int64_t>((q - 1) / h);
    return {a1, a1 + N / 3};
}

ConditionsReport theorem2_check(std::uint64_t q, std::uint32_t k, std::uint64_t h) {
    const auto pp = as_prime_power(q);
    if (!pp || k == 0) throw Error(ErrorCode::InvalidArgument, "q must be a prime power and k >= 1");
    const auto order = checked_pow(q, k, kArithmeticLimit);
    if (!order) throw Error(ErrorCode::InvalidArgument, "q^k out of range");
    if (h == 0 || (q - 1) % h != 0) throw Error(ErrorCode::HypothesisViolated, "h does not divide q-1");
    if (h % 3 != 0) throw Error(ErrorCode::HypothesisViolated, "3 does not divide h");

    ConditionsReport r;
    r.q = q;
    r.k = k;
    r.p = pp->p;
    r.t = pp->t;
    const auto N = static_cast<std::int64_t>(*order - 1);
    r.delta = static_cast<std::uint64_t>(N) / (q - 1);
    const auto [a1, a2] = theorem2_exponents(q, k, h);
    r.a1 = mod_normalize(a1, N);
    r.a2 = mod_normalize(a2, N);
    const auto rho = static_cast<std::int64_t>(3 * (q - 1) / h);
    r.hypotheses.push_back({"h | q-1", true, "h = " + str(static_cast<std::int64_t>(h))});
    r.hypotheses.push_back({"3 | h", true, "h = " + str(static_cast<std::int64_t>(h))});
    const std::int64_t g = gcd64(k, rho);
    r.hypotheses.push_back({"gcd(k, 3(q-1)/h) = 2", g == 2,
                            "gcd(" + str(k) + ", " + str(rho) + ") = " + str(g)});
    if (r.all_pass()) {
        DerivedQuantities d;
        d.n = static_cast<std::uint64_t>(h * r.delta);
        d.a = r.a1;
        d.epsilon = 1;
        d.tau_index = static_cast<std::uint64_t>(N / 3);
        r.derived = d;
    }
    return r;
}

WeightDistribution table4_closed(std::uint64_t q, std::uint32_t k, std::uint64_t h) {
    const ConditionsReport r = theorem2_check(q, k, h);
    if (!r.all_pass()) throw Error(ErrorCode::HypothesisViolated, "gcd(k, 3(q-1)/h) != 2");
    const PowersOfQ pw = powers_for_tables(q, k);
    const auto hh = static_cast<std::int64_t>(h);
    return seven_row_table(pw.Q, exact_div(2 * hh * (pw.upper - pw.lower), 3, "Table IV weight"),
                           exact_div(2 * hh * (pw.upper + pw.lower), 3, "Table IV weight"),
                           hh * (pw.upper - pw.lower), hh * (pw.upper + pw.lower),
                           exact_div(hh * (3 * pw.upper - pw.lower), 3, "Table IV weight"),
                           exact_div(hh * (3 * pw.upper + pw.lower), 3, "Table IV weight"));
}

VerificationRecord theorem3_check(std::uint64_t q, std::uint32_t k, std::uint64_t h) {
    const ConditionsReport family = theorem2_check(q, k, h);
    if (!family.all_pass()) throw Error(ErrorCode::HypothesisViolated, "gcd(k, 3(q-1)/h) != 2");
    const auto [a1, a2] = theorem2_exponents(q, k, h);
    const auto hh = static_cast<std::int64_t>(h);
    const auto qm1 = static_cast<std::int64_t>(q - 1);
    const auto delta = static_cast<std::int64_t>(family.delta);

    VerificationRecord rec("theorem3 q=" + std::to_string(q) + " k=" + std::to_string(k) +
                           " h=" + std::to_string(h));
    const ConditionsReport report = check_conditions(q, k, a1, a2);
    rec.expect_true("reducible-code conditions hold for a = (q-1)/h", report.all_pass());
    if (report.all_pass()) {
        rec.expect_eq("selected a = (q-1)/h", a1, report.derived->a);
        rec.expect_eq("lambda = 2h", 2 * hh, *report.derived->lambda);
        rec.expect_eq("n = h delta", hh * delta, static_cast<std::int64_t>(report.derived->n));
        rec.expect_eq("Table IV = Table II", weights_json(table4_closed(q, k, h)),
                      weights_json(table2_closed(report)));
    }
    const std::int64_t rho = 3 * qm1 / hh;
    rec.expect_eq("gcd(delta, 3(q-1)/h) = 2", 2, gcd64(delta, rho));
    rec.expect_eq("gcd(k, 3(q-1)/h) = 2", 2, gcd64(k, rho));
    for (std::uint64_t d : divisors(q - 1)) {
        const auto r = static_cast<std::int64_t>(d);
        rec.expect_eq("gcd(delta, rho) = gcd(k, rho), rho = " + str(r), gcd64(k, r), gcd64(delta, r));
    }
    return rec;
}

std::int64_t delsarte_sigma(const ConditionsReport& report) {
    if (!report.all_pass() || !report.derived->lambda) {
        throw Error(ErrorCode::ConditionsNotMet, "conditions do not hold");
    }
    const auto N = static_cast<std::int64_t>(report.order() - 1);
    const std::int64_t a = report.derived->a;
    const std::int64_t other = (a == report.a1) ? report.a2 : report.a1;
    const std::int64_t g = gcd64(N, a);
    const std::int64_t n = N / g;
    const std::int64_t v = inverse_mod(a / g, n);  // gamma^{v a} = gamma^{gcd}
    const int eps = mod_normalize(other - a, N) == N / 3 ? 1 : 2;
    const std::int64_t sigma = mod_normalize(v * eps, 3);
    if (sigma == 0) throw Error(ErrorCode::InternalConsistency, "3 divides v epsilon");
    return sigma;
}

std::int64_t z_from_character_sum(const Field& field, const ConditionsReport& report,
                                  FieldElement alpha, FieldElement beta) {
    const std::int64_t sigma = delsarte_sigma(report);
    const bool swap = report.derived->a != report.a1;
    const auto value = swap ? table3_pair_value(field, beta, alpha, sigma)
                            : table3_pair_value(field, alpha, beta, sigma);
    if (!value) throw Error(ErrorCode::InternalConsistency, "character sum is not rational");
    const auto n = static_cast<std::int64_t>(report.derived->n);
    const auto q = static_cast<std::int64_t>(report.q);
    return exact_div(3 * n + *report.derived->lambda * *value, 3 * q, "Z(alpha, beta)");
}

VerificationRecord lemma1_verify(const Field& field) {
    const FieldParams& fp = field.params();
    VerificationRecord rec("lemma1");
    const GaussianPeriods closed = gaussian_periods_closed(fp.p, fp.t, fp.k);
    const auto brute = gaussian_periods_from_character_sums(field);
    rec.expect_true("character sums reduce to integers", brute.has_value());
    if (brute) {
        rec.expect_eq("eta_0", closed.eta0, brute->eta0);
        rec.expect_eq("eta_1", closed.eta1, brute->eta1);
        rec.expect_eq("eta_0 + eta_1", -1, brute->eta0 + brute->eta1);
    }
    return rec;
}

VerificationRecord lemma2_verify(const Field& field) {
    const FieldParams& fp = field.params();
    VerificationRecord rec("lemma2");
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            rec.expect_eq("(" + str(i) + "," + str(j) + ")^(2)",
                          cyclotomic_number_order2_closed(fp.q, fp.k, i, j),
                          static_cast<std::int64_t>(cyclotomic_number_bruteforce(field, i, j, 2)));
        }
    }
    return rec;
}

VerificationRecord remark1_verify(const Field& field) {
    const FieldParams& fp = field.params();
    VerificationRecord rec("remark1");
    const CyclotomicClass d0 = cyclotomic_class(field, 0, 2);
    bool subfield_in_d0 = true;
    for (std::uint64_t j = 0; j + 1 < fp.q; ++j) {
        subfield_in_d0 = subfield_in_d0 &&
                         d0.contains(FieldElement::from_log(static_cast<std::uint32_t>(j * fp.delta)));
    }
    rec.expect_true("F_q^* in D_0^(2)", subfield_in_d0);
    const FieldElement tau = field.gamma_pow(static_cast<std::int64_t>(field.group_order() / 3));
    rec.expect_true("tau in D_0^(2)", d0.contains(tau));
    const FieldElement poly = field.add(field.add(field.mul(tau, tau), tau), field.one());
    rec.expect_true("tau^2 + tau + 1 = 0", poly.is_zero(), field.to_string(poly));
    rec.expect_true("tau != 1", tau != field.one());
    rec.expect_true("k even", fp.k % 2 == 0, fp.k);
    rec.expect_true("q odd and q > 5", fp.q % 2 == 1 && fp.q > 5, fp.q);
    rec.expect_true("3 | q-1", (fp.q - 1) % 3 == 0, fp.q - 1);
    rec.expect_true("4 | q^k-1", field.group_order() % 4 == 0, field.group_order());
    return rec;
}

VerificationRecord lemma5_verify(const Field& field, std::int64_t sigma) {
    const FieldParams& fp = field.params();
    const SetPartitionCensus census = partition_census(field, sigma);
    const auto closed = lemma5_closed(fp.q, fp.k);
    const auto Q = static_cast<std::int64_t>(fp.order);
    VerificationRecord rec("lemma5 sigma=" + str(sigma));
    for (int l = 0; l < 4; ++l) rec.expect_eq("|S_" + str(l) + "|", closed[l], census.s[l]);
    std::uint64_t s_total = 0;
    for (auto s : census.s) s_total += s;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) {
            rec.expect_eq("|E_" + str(i) + "," + str(j) + "|", (Q - 1) / 2,
                          static_cast<std::int64_t>(census.e[i][j]));
        }
    }
    rec.expect_eq("|G|", (Q - 1) * (Q - 2), static_cast<std::int64_t>(census.g));
    std::uint64_t e_total = 0;
    for (const auto& row : census.e) e_total += row[0] + row[1];
    rec.expect_eq("sum |E_i,j| + |G| = q^2k - 1", Q * Q - 1,
                  static_cast<std::int64_t>(e_total + census.g));
    rec.expect_eq("sum |S_l| = |G|", census.g, s_total);
    return rec;
}

VerificationRecord table3_verify(const Field& field, std::int64_t sigma) {
    const FieldParams& fp = field.params();
    const Table3BruteForce brute = table3_bruteforce(field, sigma);
    VerificationRecord rec("table3 sigma=" + str(sigma));
    rec.expect_eq("value distribution", values_json(table3_closed(fp.q, fp.k)),
                  values_json(brute.distribution));
    rec.expect_eq("pairs whose value disagrees with their case", 0, brute.case_mismatches);
    rec.expect_eq("sums not reducing to integers", 0, brute.unreduced);
    rec.expect_eq("frequency total", fp.order * fp.order, brute.distribution.total());
    return rec;
}

VerificationRecord structural_verify(const Field& field, const CodeSpec& spec,
                                     const WeightDistribution& brute, std::uint64_t samples,
                                     std::uint64_t seed, const EnumerationOptions& options) {
    const FieldParams& fp = field.params();
    const std::uint32_t dim = spec.reducible() ? 2 * fp.k : fp.k;
    const std::uint64_t size = *checked_pow(fp.q, dim);
    VerificationRecord rec("structure C_(" + std::to_string(spec.a1) +
                           (spec.a2 ? "," + std::to_string(*spec.a2) : std::string()) + ")");
    rec.expect_eq("frequency total = q^dim", size, brute.total());
    // Each coordinate is zero in exactly a 1/q fraction of the codewords.
    rec.expect_eq("sum A_w w = n (q-1) q^(dim-1)", spec.n * (fp.q - 1) * (size / fp.q),
                  brute.first_moment());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, field.size() - 1);
    const FieldElement g1 = field.gamma_pow(spec.a1);
    const FieldElement g2 = field.gamma_pow(spec.a2.value_or(0));
    std::uint64_t not_closed = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const FieldElement alpha = element_at(pick(rng));
        const FieldElement beta = spec.reducible() ? element_at(pick(rng)) : field.zero();
        const auto shifted = cyclic_shift_left(codeword(field, spec, alpha, beta));
        not_closed += shifted != codeword(field, spec, field.mul(alpha, g1), field.mul(beta, g2));
    }
    rec.expect_eq("shifted codewords outside the code", 0, not_closed);
    try {
        rec.expect_eq("distinct codewords", size, count_distinct_codewords(field, spec, options));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EnumerationBudgetExceeded) throw;
        rec.expect_eq("distinct codewords (q^rank)", size,
                      *checked_pow(fp.q, codeword_rank(field, spec)));
    }
    return rec;
}

VerificationRecord delsarte_identity_verify(const Field& field, const ConditionsReport& report) {
    const CodeSpec spec = CodeSpec::make(field.params(), report.a1, report.a2);
    VerificationRecord rec("delsarte Z identity a1=" + str(report.a1) + " a2=" + str(report.a2));
    std::int64_t mismatches = 0;
    const auto cache = d0_histograms(field);
    const std::int64_t sigma = delsarte_sigma(report);
    const TauPowers tau(field, sigma);
    const bool swap = report.derived->a != report.a1;
    const auto n = static_cast<std::int64_t>(report.derived->n);
    const auto q = static_cast<std::int64_t>(report.q);
    CyclotomicIntegerSum total(field.params().p);
    for (std::uint64_t ai = 0; ai < field.size(); ++ai) {
        for (std::uint64_t bi = 0; bi < field.size(); ++bi) {
            const FieldElement alpha = element_at(ai);
            const FieldElement beta = element_at(bi);
            const FieldElement x = swap ? beta : alpha;
            const FieldElement y = swap ? alpha : beta;
            std::fill(total.counts.begin(), total.counts.end(), 0);
            for (int i = 0; i < 3; ++i) total += cache[index_of(field.add(x, field.mul(tau[i], y)))];
            const auto value = total.reduce();
            const std::int64_t numer = 3 * n + *report.derived->lambda * value.value_or(0);
            const bool ok = value && numer % (3 * q) == 0 &&
                            numer / (3 * q) ==
                                static_cast<std::int64_t>(z_count(field, spec, alpha, beta));
            mismatches += !ok;
        }
    }
    rec.expect_eq("pairs where Z differs from n/q + (lambda/3q) S", 0, mismatches);
    return rec;
}

}  // namespace cyclocode
