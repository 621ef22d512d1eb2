#include "cyclocode/cli.hpp"

#include "cyclocode/catalog.hpp"
#include "cyclocode/code.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"
#include "cyclocode/report.hpp"
#include "cyclocode/theorem.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace cyclocode {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Settings {
    std::uint64_t q = 0;
    std::uint32_t k = 0;
    std::optional<std::int64_t> a1, a2, a;
    std::optional<std::uint64_t> h;
    std::vector<std::int64_t> sigmas{1, 2, 4};
    bool verify = false;
    bool projective = false;
    std::string format = "text";
    std::string field_poly;
    unsigned threads = 0;
    std::uint64_t budget = 100'000'000;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;

    EnumerationOptions enumeration() const { return {budget, threads, projective}; }
};

/// Raised for parameter problems detected by the front end itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PrimePower field_size(const Settings& s) {
    const auto pp = as_prime_power(s.q);
    if (!pp) throw UsageError("--q " + std::to_string(s.q) + " is not a prime power");
    if (s.k == 0) throw UsageError("--k must be at least 1");
    return *pp;
}

Field build_field(const Settings& s) {
    const PrimePower pp = field_size(s);
    std::optional<PrimeFieldPoly> modulus;
    if (!s.field_poly.empty()) modulus = parse_coefficient_list(s.field_poly);
    return Field::build(pp.p, pp.t, s.k, modulus);
}

std::string failed_names(const std::vector<ConditionCheck>& checks) {
    std::string out;
    for (const auto& c : checks) {
        if (c.pass) continue;
        if (!out.empty()) out += "; ";
        out += c.name + " (" + c.witness + ")";
    }
    return out;
}

bool all_passed(const std::vector<VerificationRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.passed(); });
}

ordered_json records_json(const std::vector<VerificationRecord>& records) {
    ordered_json out = ordered_json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    return out;
}

std::string records_csv(const std::vector<VerificationRecord>& records) {
    std::string out = "record,check,expected,actual,pass\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const auto& r : records) {
        for (const auto& c : r.checks) {
            out += quote(r.name) + "," + quote(c.check_name) + "," + quote(c.expected.dump()) + "," +
                   quote(c.actual.dump()) + "," + (c.pass ? "true" : "false") + "\n";
        }
    }
    return out;
}

struct Component {
    std::int64_t exponent = 0;
    CodeSpec spec;
    WeightDistribution closed_form;
    std::optional<WeightDistribution> brute_force;
};

// ---------------------------------------------------------------- analyze

int run_analyze(const Settings& s, std::ostream& out, std::ostream& err) {
    field_size(s);
    std::optional<ConditionsReport> family;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    if (s.h) {
        if (s.a1 || s.a2) throw UsageError("--h cannot be combined with --a1/--a2");
        family = theorem2_check(s.q, s.k, *s.h);
        if (!family->all_pass()) {
            err << "error: h-family hypotheses fail: " << failed_names(family->hypotheses) << '\n';
            return kExitUsage;
        }
        std::tie(a1, a2) = theorem2_exponents(s.q, s.k, *s.h);
    } else {
        if (!s.a1 || !s.a2) throw UsageError("analyze needs --a1 and --a2 (or --h)");
        a1 = *s.a1;
        a2 = *s.a2;
    }

    const ConditionsReport report = check_conditions(s.q, s.k, a1, a2);
    if (!report.all_pass()) {
        err << "error: conditions fail: " << failed_names(report.hypotheses) << '\n';
        return kExitUsage;
    }

    const FieldParams params = FieldParams::make(report.p, report.t, report.k);
    const CodeSpec spec = CodeSpec::make(params, report.a1, report.a2);
    const WeightDistribution closed = table2_closed(report);
    const WeightDistribution table1 = table1_closed(report);
    std::vector<Component> components;
    for (std::int64_t e : {report.a1, report.a2}) {
        components.push_back({e, CodeSpec::component(spec, e), table1, std::nullopt});
    }

    std::vector<VerificationRecord> records;
    VerificationRecord consequences("derived assertions");
    for (const auto& c : report.consequences) consequences.expect_true(c.name, c.pass, c.witness);
    records.push_back(std::move(consequences));

    std::optional<WeightDistribution> table4;
    if (family) {
        table4 = table4_closed(s.q, s.k, *s.h);
        records.push_back(theorem3_check(s.q, s.k, *s.h));
    }

    std::optional<WeightDistribution> brute;
    std::optional<Field> field;
    if (s.verify || s.samples > 0) field = build_field(s);
    if (s.verify) {
        const EnumerationOptions opts = s.enumeration();
        brute = weight_distribution_bruteforce(*field, spec, opts);
        VerificationRecord rec("brute force vs closed form");
        rec.expect_eq("C_(a1,a2)", to_json(closed), to_json(*brute));
        for (auto& c : components) {
            c.brute_force = weight_distribution_bruteforce(*field, c.spec, opts);
            rec.expect_eq("C_(" + std::to_string(c.exponent) + ")", to_json(c.closed_form),
                          to_json(*c.brute_force));
        }
        if (table4) rec.expect_eq("h-family table", to_json(*table4), to_json(*brute));
        records.push_back(std::move(rec));
        records.push_back(structural_verify(*field, spec, *brute, 100, s.seed, opts));
        for (const auto& c : components) {
            records.push_back(structural_verify(*field, c.spec, *c.brute_force, 100, s.seed, opts));
        }
    }

    ordered_json sampling = nullptr;
    if (s.samples > 0) {
        const auto weights = sample_weights(*field, spec, s.samples, s.seed);
        std::set<std::uint64_t> seen(weights.begin(), weights.end());
        std::uint64_t outside = 0;
        for (auto w : weights) outside += (closed.frequency(w) == 0);
        VerificationRecord rec("sampled weights");
        rec.expect_eq("samples outside the closed-form support", 0, outside);
        records.push_back(std::move(rec));
        sampling = {{"samples", s.samples},
                    {"seed", s.seed},
                    {"distinct_weights", std::vector<std::uint64_t>(seen.begin(), seen.end())},
                    {"outside_support", outside}};
    }

    const bool ok = all_passed(records);
    const bool verified = s.verify && ok;

    if (s.format == "json") {
        ordered_json j;
        j["params"] = params_json(report);
        j["conditions"] = to_json(report.hypotheses);
        j["derived"] = derived_json(report);
        j["closed_form"] = to_json(closed);
        j["brute_force"] = brute ? to_json(*brute) : ordered_json(nullptr);
        j["verified"] = verified;
        j["exponents"] = {{"a1", report.a1}, {"a2", report.a2}};
        j["consequences"] = to_json(report.consequences);
        j["semiprimitive"] = {{"a1", report.semiprimitive_a1}, {"a2", report.semiprimitive_a2}};
        j["enumerator"] = closed.to_polynomial();
        ordered_json comps = ordered_json::array();
        for (const auto& c : components) {
            comps.push_back({{"exponent", c.exponent},
                             {"n", c.spec.n},
                             {"closed_form", to_json(c.closed_form)},
                             {"brute_force", c.brute_force ? to_json(*c.brute_force) : ordered_json(nullptr)},
                             {"enumerator", c.closed_form.to_polynomial()}});
        }
        j["components"] = comps;
        if (family) j["h_family"] = {{"h", *s.h}, {"closed_form", to_json(*table4)}};
        j["sampling"] = sampling;
        j["verification"] = records_json(records);
        out << j.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << weights_csv(brute ? *brute : closed);
    } else {
        out << "F_" << report.q << "^" << report.k << "  (p=" << report.p << ", t=" << report.t
            << ", delta=" << report.delta << ")\n";
        out << "C_(" << report.a1 << "," << report.a2 << ")\n\n";
        out << checks_text("Hypotheses", report.hypotheses) << '\n';
        const auto& d = *report.derived;
        out << "n = " << d.n << "  a = " << d.a << "  lambda = " << *d.lambda
            << "  epsilon = " << *d.epsilon << "\n\n";
        out << weights_table("Irreducible components, length " + std::to_string(spec.n), table1);
        out << "  A(z) = " << table1.to_polynomial() << "\n\n";
        out << weights_table("Reducible code, length " + std::to_string(spec.n) + ", dimension " +
                                 std::to_string(2 * report.k),
                             closed);
        out << "  A(z) = " << closed.to_polynomial() << "\n\n";
        if (brute) out << "Brute force: A(z) = " << brute->to_polynomial() << "\n\n";
        for (const auto& r : records) out << record_text(r);
        out << (verified ? "verified\n" : (s.verify ? "NOT verified\n" : "closed form only\n"));
    }
    return ok ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------ irreducible

int run_irreducible(const Settings& s, std::ostream& out, std::ostream& err) {
    field_size(s);
    if (!s.a) throw UsageError("irreducible needs --a");
    const ConditionsReport report = check_irreducible_conditions(s.q, s.k, *s.a);
    if (!report.all_pass()) {
        err << "error: conditions fail: " << failed_names(report.hypotheses) << '\n';
        return kExitUsage;
    }
    const FieldParams params = FieldParams::make(report.p, report.t, report.k);
    const CodeSpec spec = CodeSpec::make(params, report.a1);
    const WeightDistribution closed = table1_closed(report);

    std::vector<VerificationRecord> records;
    VerificationRecord consequences("derived assertions");
    for (const auto& c : report.consequences) consequences.expect_true(c.name, c.pass, c.witness);
    records.push_back(std::move(consequences));

    std::optional<WeightDistribution> brute;
    if (s.verify) {
        const Field field = build_field(s);
        brute = weight_distribution_bruteforce(field, spec, s.enumeration());
        VerificationRecord rec("brute force vs closed form");
        rec.expect_eq("C_(a)", to_json(closed), to_json(*brute));
        records.push_back(std::move(rec));
        records.push_back(structural_verify(field, spec, *brute, 100, s.seed, s.enumeration()));
    }
    const bool ok = all_passed(records);

    if (s.format == "json") {
        ordered_json j;
        j["params"] = params_json(report);
        j["conditions"] = to_json(report.hypotheses);
        j["derived"] = derived_json(report);
        j["closed_form"] = to_json(closed);
        j["brute_force"] = brute ? to_json(*brute) : ordered_json(nullptr);
        j["verified"] = s.verify && ok;
        j["consequences"] = to_json(report.consequences);
        j["semiprimitive"] = report.semiprimitive_a1;
        j["enumerator"] = closed.to_polynomial();
        j["verification"] = records_json(records);
        out << j.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << weights_csv(brute ? *brute : closed);
    } else {
        out << "C_(" << report.a1 << ") over F_" << report.q << "^" << report.k << "\n\n";
        out << checks_text("Hypotheses", report.hypotheses) << '\n';
        out << "n = " << report.derived->n << "  lambda = " << *report.derived->lambda << "\n\n";
        out << weights_table("Weight distribution", closed);
        out << "  A(z) = " << closed.to_polynomial() << "\n\n";
        if (brute) out << "Brute force: A(z) = " << brute->to_polynomial() << "\n\n";
        for (const auto& r : records) out << record_text(r);
    }
    return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- catalog

int run_catalog(const Settings& s, std::ostream& out, std::ostream&) {
    const PrimePower pp = field_size(s);
    auto entries = enumerate_catalog(s.q, s.k);
    const std::uint64_t formula = count_formula(s.q, s.k);
    if (s.verify) verify_catalog_entries(build_field(s), entries, s.enumeration());

    VerificationRecord count("catalog size");
    count.expect_eq("phi(delta/2)(q-1)/k", formula, entries.size());
    bool ok = count.passed();
    for (const auto& e : entries) ok = ok && e.status != VerifyStatus::Failed;
    const std::uint64_t delta = (*checked_pow(s.q, s.k) - 1) / (s.q - 1);

    if (s.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& e : entries) {
            rows.push_back({{"rep1", e.rep1},
                            {"rep2", e.rep2},
                            {"a1", e.a1},
                            {"a2", e.a2},
                            {"n", e.n},
                            {"lambda", e.lambda},
                            {"enumerator", e.closed_form.to_polynomial()},
                            {"closed_form", to_json(e.closed_form)},
                            {"brute_force", e.brute_force ? to_json(*e.brute_force) : ordered_json(nullptr)},
                            {"status", to_string(e.status)}});
        }
        ordered_json j;
        j["params"] = {{"p", pp.p}, {"t", pp.t}, {"q", s.q}, {"k", s.k}, {"delta", delta}};
        j["entries"] = rows;
        j["catalog_size"] = entries.size();
        j["count_formula"] = formula;
        j["verified"] = s.verify && ok;
        out << j.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << "rep1,rep2,a1,a2,n,lambda,enumerator,status\n";
        for (const auto& e : entries) {
            out << e.rep1 << ',' << e.rep2 << ',' << e.a1 << ',' << e.a2 << ',' << e.n << ',' << e.lambda
                << ",\"" << e.closed_form.to_polynomial() << "\"," << to_string(e.status) << '\n';
        }
    } else {
        out << "Reducible codes C_(a1,a2) for q = " << s.q << ", k = " << s.k << "\n";
        out << "  cosets      n    lambda  status   A(z)\n";
        for (const auto& e : entries) {
            std::ostringstream key;
            key << "(" << e.rep1 << "," << e.rep2 << ")";
            std::string k = key.str();
            k.resize(std::max<std::size_t>(k.size(), 10), ' ');
            std::string n = std::to_string(e.n);
            n.resize(std::max<std::size_t>(n.size(), 4), ' ');
            std::string l = std::to_string(e.lambda);
            l.resize(std::max<std::size_t>(l.size(), 6), ' ');
            std::string st = to_string(e.status);
            st.resize(std::max<std::size_t>(st.size(), 7), ' ');
            out << "  " << k << "  " << n << " " << l << "  " << st << "  " << e.closed_form.to_polynomial()
                << '\n';
        }
        out << "phi(delta/2)(q-1)/k = " << formula << ", catalog size = " << entries.size() << ": "
            << (formula == entries.size() ? "match" : "MISMATCH") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------- verify-lemmas

int run_verify_lemmas(const Settings& s, std::ostream& out, std::ostream&) {
    field_size(s);
    if (!main_assumption_holds(s.q, s.k)) {
        throw Error(ErrorCode::AssumptionViolated, "main assumption fails for q=" + std::to_string(s.q) +
                                                       ", k=" + std::to_string(s.k));
    }
    const Field field = build_field(s);
    const FieldParams& fp = field.params();
    const std::uint64_t pairs = fp.order * fp.order;

    std::vector<VerificationRecord> records;
    std::vector<std::string> skipped;
    records.push_back(remark1_verify(field));
    records.push_back(lemma1_verify(field));
    records.push_back(lemma2_verify(field));

    // Exponent pairs: the given one, or the catalog (first entry per lambda
    // for the pair-sweeping identity check).
    std::vector<std::pair<std::int64_t, std::int64_t>> exponent_pairs;
    std::vector<std::pair<std::int64_t, std::int64_t>> identity_pairs;
    if (s.a1 || s.a2) {
        if (!s.a1 || !s.a2) throw UsageError("--a1 and --a2 go together");
        exponent_pairs.emplace_back(*s.a1, *s.a2);
        identity_pairs = exponent_pairs;
    } else {
        std::set<std::int64_t> lambdas;
        for (const auto& e : enumerate_catalog(s.q, s.k)) {
            exponent_pairs.emplace_back(e.a1, e.a2);
            if (lambdas.insert(e.lambda).second) identity_pairs.emplace_back(e.a1, e.a2);
        }
    }
    for (const auto& [x, y] : exponent_pairs) records.push_back(lemma3_verify(s.q, s.k, x, y));

    for (std::int64_t lambda : lemma4_admissible_lambdas(fp)) {
        const std::int64_t m = 6 * static_cast<std::int64_t>(fp.q - 1) / lambda;
        for (std::int64_t i = 0; i < m; ++i) records.push_back(lemma4_verify(field, lambda, i));
    }

    for (std::int64_t sigma : s.sigmas) {
        if (pairs > s.budget) {
            skipped.push_back("lemma5/table3 sigma=" + std::to_string(sigma) + ": " + std::to_string(pairs) +
                              " pairs over budget");
            continue;
        }
        records.push_back(lemma5_verify(field, sigma));
        records.push_back(table3_verify(field, sigma));
    }

    for (const auto& [x, y] : identity_pairs) {
        const ConditionsReport report = check_conditions(s.q, s.k, x, y);
        if (!report.all_pass()) {
            throw UsageError("conditions fail: " + failed_names(report.hypotheses));
        }
        const std::uint64_t cost = pairs * report.derived->n;
        if (cost > s.budget) {
            skipped.push_back("Z identity for (" + std::to_string(x) + "," + std::to_string(y) +
                              "): " + std::to_string(cost) + " coordinate evaluations over budget");
            continue;
        }
        records.push_back(delsarte_identity_verify(field, report));
    }

    const bool ok = all_passed(records);
    if (s.format == "json") {
        ordered_json j;
        j["params"] = {{"p", fp.p}, {"t", fp.t}, {"q", fp.q}, {"k", fp.k}, {"delta", fp.delta}};
        j["table3_closed"] = to_json(table3_closed(fp.q, fp.k));
        j["lemma5_closed"] = lemma5_closed(fp.q, fp.k);
        j["records"] = records_json(records);
        j["skipped"] = skipped;
        j["verified"] = ok;
        out << j.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << records_csv(records);
    } else {
        out << values_table("Character-sum values, q = " + std::to_string(fp.q) + ", k = " +
                                std::to_string(fp.k),
                            table3_closed(fp.q, fp.k))
            << '\n';
        for (const auto& r : records) out << record_text(r);
        for (const auto& sk : skipped) out << "[skip] " << sk << '\n';
        out << (ok ? "all checks passed\n" : "FAILURES found\n");
    }
    return ok ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------- probe-conjecture

int run_probe(const Settings& s, std::ostream& out, std::ostream&) {
    field_size(s);
    if (!main_assumption_holds(s.q, s.k)) {
        throw Error(ErrorCode::AssumptionViolated, "main assumption fails for q=" + std::to_string(s.q) +
                                                       ", k=" + std::to_string(s.k));
    }
    const Field field = build_field(s);
    const ProbeReport report = probe_conjecture(field, s.enumeration());
    const FieldParams& fp = field.params();
    if (s.format == "json") {
        ordered_json matches = ordered_json::array();
        for (const auto& m : report.matches) {
            matches.push_back({{"rep1", m.rep1}, {"rep2", m.rep2}, {"n", m.n},
                               {"distribution", to_json(m.distribution)}});
        }
        ordered_json j;
        j["params"] = {{"p", fp.p}, {"t", fp.t}, {"q", fp.q}, {"k", fp.k}, {"delta", fp.delta}};
        j["catalog_size"] = report.catalog_size;
        j["candidates"] = report.candidates;
        j["enumerated"] = report.enumerated;
        j["skipped"] = report.skipped;
        j["matches"] = matches;
        out << j.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << "rep1,rep2,n\n";
        for (const auto& m : report.matches) out << m.rep1 << ',' << m.rep2 << ',' << m.n << '\n';
    } else {
        out << "catalog size " << report.catalog_size << "; " << report.candidates
            << " other coset pairs at catalog lengths, " << report.enumerated << " enumerated, "
            << report.skipped << " over budget\n";
        if (report.matches.empty()) {
            out << "no code outside the catalog shares its weight distribution\n";
        } else {
            for (const auto& m : report.matches) {
                out << "same distribution: C_(" << m.rep1 << "," << m.rep2 << "), n = " << m.n << '\n';
            }
        }
    }
    return kExitOk;
}

void add_field_options(CLI::App* cmd, Settings& s) {
    cmd->add_option("--q", s.q, "field size q (a prime power)")->required();
    cmd->add_option("--k", s.k, "extension degree k")->required();
    cmd->add_option("--format", s.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--field-poly", s.field_poly,
                    "defining polynomial of F_{q^k} over F_p, coefficients constant term first");
    cmd->add_option("--threads", s.threads, "worker threads, 0 = auto");
    cmd->add_option("--budget", s.budget, "cap on enumerated pairs");
    cmd->add_flag("--projective", s.projective, "enumerate one pair per F_q^* scaling orbit");
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Weight distributions of reducible cyclic codes"};
    app.name("cyclocode");
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "conditions, closed-form and brute-force enumerators");
    add_field_options(analyze, s);
    analyze->add_option("--a1", s.a1, "first exponent");
    analyze->add_option("--a2", s.a2, "second exponent");
    analyze->add_option("--h", s.h, "use a1 = (q-1)/h, a2 = a1 + (q^k-1)/3");
    analyze->add_flag("--verify", s.verify, "brute-force every enumerator");
    analyze->add_option("--samples", s.samples, "random codewords checked against the weight support");
    analyze->add_option("--seed", s.seed, "sampling seed");

    auto* irreducible = app.add_subcommand("irreducible", "two-weight code C_(a)");
    add_field_options(irreducible, s);
    irreducible->add_option("--a", s.a, "exponent")->required();
    irreducible->add_flag("--verify", s.verify, "brute-force the enumerator");
    irreducible->add_option("--seed", s.seed, "sampling seed");

    auto* catalog = app.add_subcommand("catalog", "every code of the family for (q, k)");
    add_field_options(catalog, s);
    catalog->add_flag("--verify", s.verify, "brute-force every entry");

    auto* lemmas = app.add_subcommand("verify-lemmas", "exhaustive checks of the supporting lemmas");
    add_field_options(lemmas, s);
    lemmas->add_option("--sigma", s.sigmas, "values of sigma (not divisible by 3)");
    lemmas->add_option("--a1", s.a1, "first exponent");
    lemmas->add_option("--a2", s.a2, "second exponent");

    auto* probe = app.add_subcommand("probe-conjecture", "search for other codes with the same distribution");
    add_field_options(probe, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(s, out, err);
        if (*irreducible) return run_irreducible(s, out, err);
        if (*catalog) return run_catalog(s, out, err);
        if (*lemmas) return run_verify_lemmas(s, out, err);
        if (*probe) return run_probe(s, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.is_internal() ? kExitMismatch : kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cyclocode
