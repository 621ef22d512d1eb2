#include "cyclocode/field.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace cyclocode {

namespace {

using Poly = std::vector<std::uint64_t>;  // over F_p, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// a mod f for monic f.
Poly reduce(Poly a, const Poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    trim(a);
    while (a.size() > m) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - m;
        for (std::size_t i = 0; i <= m; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * f[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return reduce(std::move(r), f, p);
}

Poly pow_mod_poly(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r = reduce({1}, f, p);
    base = reduce(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mul_mod(r, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

/// Remainder of a by arbitrary nonzero b.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::uint64_t inv_lead = inv_mod_prime(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t factor = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - factor) * b[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly widen(const PrimeFieldPoly& f) { return Poly(f.begin(), f.end()); }

void check_monic_shape(const PrimeFieldPoly& f, std::uint64_t p) {
    if (f.size() < 2) throw Error(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    if (f.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
    for (auto c : f) {
        if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
}

}  // namespace

FieldParams FieldParams::make(std::uint64_t p, std::uint32_t t, std::uint32_t k) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "t and k must be positive");
    const auto order = checked_pow(p, std::uint64_t{t} * k, kTableBudget);
    if (!order) {
        throw Error(ErrorCode::TableBudgetExceeded,
                    "p^(tk) exceeds the table budget of " + std::to_string(kTableBudget));
    }
    FieldParams fp;
    fp.p = p;
    fp.t = t;
    fp.k = k;
    fp.q = *checked_pow(p, t);
    fp.order = *order;
    fp.delta = (fp.order - 1) / (fp.q - 1);
    return fp;
}

PrimeFieldPoly parse_coefficient_list(std::string_view text) {
    PrimeFieldPoly out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw Error(ErrorCode::InvalidArgument,
                        "malformed coefficient list '" + std::string(text) + "'");
        }
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

bool is_irreducible(const PrimeFieldPoly& f, std::uint64_t p) {
    check_monic_shape(f, p);
    const Poly mod = widen(f);
    const std::size_t m = f.size() - 1;
    // No factor of degree d <= m/2 iff gcd(x^{p^d} - x, f) = 1 for all such d.
    Poly power = reduce({0, 1}, mod, p);
    for (std::size_t d = 1; d <= m / 2; ++d) {
        power = pow_mod_poly(power, p, mod, p);
        Poly diff = power;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(mod, diff, p).size() > 1) return false;
    }
    return true;
}

bool is_primitive(const PrimeFieldPoly& f, std::uint64_t p) {
    check_monic_shape(f, p);
    const Poly mod = widen(f);
    const std::uint64_t order = *checked_pow(p, f.size() - 1);
    const std::uint64_t n = order - 1;
    const Poly one = reduce({1}, mod, p);
    const Poly x = reduce({0, 1}, mod, p);
    if (pow_mod_poly(x, n, mod, p) != one) return false;
    for (std::uint64_t r : prime_factors(n)) {
        if (pow_mod_poly(x, n / r, mod, p) == one) return false;
    }
    return true;
}

PrimeFieldPoly smallest_primitive_polynomial(std::uint64_t p, std::uint32_t degree) {
    if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    // Odometer over (c_0, ..., c_{m-1}) with c_0 the most significant digit.
    PrimeFieldPoly f(degree + 1, 0);
    f[degree] = 1;
    f[0] = 1;  // c_0 = 0 makes x a factor
    while (true) {
        if (is_primitive(f, p)) return f;
        std::int64_t pos = static_cast<std::int64_t>(degree) - 1;
        while (pos >= 0) {
            if (++f[pos] < p) break;
            f[pos] = 0;
            --pos;
        }
        if (pos < 0 || f[0] == 0) {
            throw Error(ErrorCode::InternalConsistency, "no primitive polynomial found");
        }
    }
}

Field Field::build(std::uint64_t p, std::uint32_t t, std::uint32_t k,
                   const std::optional<PrimeFieldPoly>& modulus_override) {
    auto tables = std::make_shared<Tables>();
    tables->params = FieldParams::make(p, t, k);
    const FieldParams& fp = tables->params;
    const std::uint32_t m = fp.degree();

    if (modulus_override) {
        const PrimeFieldPoly& f = *modulus_override;
        check_monic_shape(f, p);
        if (f.size() != m + 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "modulus degree must be " + std::to_string(m));
        }
        if (!is_irreducible(f, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
        if (!is_primitive(f, p)) {
            throw Error(ErrorCode::NonPrimitiveModulus, "root of modulus is not primitive");
        }
        tables->modulus = f;
    } else {
        tables->modulus = smallest_primitive_polynomial(p, m);
    }

    const auto n = static_cast<std::uint32_t>(fp.group_order());
    const auto order = static_cast<std::uint32_t>(fp.order);
    const std::uint32_t pp = static_cast<std::uint32_t>(p);
    tables->group_order = n;
    tables->minus_one_log = (p == 2) ? 0 : n / 2;
    tables->antilog.assign(n, 0);
    tables->log.assign(order, FieldElement::kZeroTag);

    std::vector<std::uint64_t> digits(m, 0);
    digits[0] = 1;
    const PrimeFieldPoly& f = tables->modulus;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t idx = 0;
        for (std::uint32_t d = m; d-- > 0;) idx = idx * pp + static_cast<std::uint32_t>(digits[d]);
        if (tables->log[idx] != FieldElement::kZeroTag) {
            throw Error(ErrorCode::InternalConsistency, "gamma is not primitive");
        }
        tables->antilog[i] = idx;
        tables->log[idx] = i;
        // digits *= x, reduced with x^m = -sum f_i x^i
        const std::uint64_t carry = digits[m - 1];
        for (std::uint32_t d = m - 1; d > 0; --d) digits[d] = digits[d - 1];
        digits[0] = 0;
        for (std::uint32_t d = 0; d < m; ++d) digits[d] = (digits[d] + (p - f[d]) * carry) % p;
    }

    tables->zech.assign(n, FieldElement::kZeroTag);
    for (std::uint32_t e = 0; e < n; ++e) {
        const std::uint32_t v = tables->antilog[e];
        const std::uint32_t d0 = v % pp;
        const std::uint32_t w = v - d0 + (d0 + 1) % pp;
        tables->zech[e] = (w == 0) ? FieldElement::kZeroTag : tables->log[w];
    }

    Field field(tables);
    tables->rel_trace.assign(n, FieldElement::kZeroTag);
    tables->rel_trace_symbol.assign(n, 0);
    tables->neg_rel_trace_symbol.assign(n, 0);
    tables->abs_trace.assign(n, 0);
    for (std::uint32_t L = 0; L < n; ++L) {
        FieldElement rel = FieldElement::zero();
        std::uint64_t e = L;
        for (std::uint32_t j = 0; j < fp.k; ++j) {
            rel = field.add(rel, FieldElement::from_log(static_cast<std::uint32_t>(e)));
            e = e * (fp.q % n) % n;
        }
        FieldElement abs = FieldElement::zero();
        e = L;
        for (std::uint32_t j = 0; j < m; ++j) {
            abs = field.add(abs, FieldElement::from_log(static_cast<std::uint32_t>(e)));
            e = e * (p % n) % n;
        }
        if (!field.in_subfield(rel)) {
            throw Error(ErrorCode::InternalConsistency, "relative trace left the subfield");
        }
        const std::uint32_t abs_vec = field.to_vector(abs);
        if (abs_vec >= p) throw Error(ErrorCode::InternalConsistency, "absolute trace left F_p");
        tables->rel_trace[L] = rel.log();
        tables->rel_trace_symbol[L] = field.subfield_symbol(rel);
        tables->neg_rel_trace_symbol[L] = field.subfield_symbol(field.neg(rel));
        tables->abs_trace[L] = abs_vec;
    }
    return field;
}

FieldElement Field::gamma() const noexcept { return gamma_pow(1); }

FieldElement Field::gamma_pow(std::int64_t e) const noexcept {
    return FieldElement::from_log(
        static_cast<std::uint32_t>(mod_normalize(e, tables_->group_order)));
}

FieldElement Field::add(FieldElement x, FieldElement y) const noexcept {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint32_t n = tables_->group_order;
    const std::uint32_t lx = x.log();
    const std::uint32_t ly = y.log();
    const std::uint32_t d = ly >= lx ? ly - lx : ly + n - lx;
    const std::uint32_t z = tables_->zech[d];
    if (z == FieldElement::kZeroTag) return FieldElement::zero();
    std::uint32_t r = lx + z;
    if (r >= n) r -= n;
    return FieldElement::from_log(r);
}

FieldElement Field::neg(FieldElement x) const noexcept {
    if (x.is_zero()) return x;
    std::uint32_t r = x.log() + tables_->minus_one_log;
    if (r >= tables_->group_order) r -= tables_->group_order;
    return FieldElement::from_log(r);
}

FieldElement Field::mul(FieldElement x, FieldElement y) const noexcept {
    if (x.is_zero() || y.is_zero()) return FieldElement::zero();
    std::uint32_t r = x.log() + y.log();
    if (r >= tables_->group_order) r -= tables_->group_order;
    return FieldElement::from_log(r);
}

FieldElement Field::inv(FieldElement x) const {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t n = tables_->group_order;
    return FieldElement::from_log((n - x.log()) % n);
}

FieldElement Field::pow(FieldElement x, std::int64_t e) const {
    if (x.is_zero()) {
        if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t n = tables_->group_order;
    const std::int64_t r = mod_normalize(e, n);
    return FieldElement::from_log(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(x.log()) * static_cast<std::uint64_t>(r) % n));
}

FieldElement Field::from_vector(std::uint32_t v) const {
    if (v >= tables_->params.order) {
        throw Error(ErrorCode::InvalidArgument, "vector index out of range");
    }
    if (v == 0) return FieldElement::zero();
    return FieldElement::from_log(tables_->log[v]);
}

std::uint32_t Field::to_vector(FieldElement x) const noexcept {
    return x.is_zero() ? 0 : tables_->antilog[x.log()];
}

FieldElement Field::trace_relative(FieldElement x) const noexcept {
    if (x.is_zero()) return x;
    const std::uint32_t tag = tables_->rel_trace[x.log()];
    return tag == FieldElement::kZeroTag ? FieldElement::zero() : FieldElement::from_log(tag);
}

std::uint32_t Field::trace_absolute(FieldElement x) const noexcept {
    return x.is_zero() ? 0 : tables_->abs_trace[x.log()];
}

bool Field::in_subfield(FieldElement x) const noexcept {
    return x.is_zero() || x.log() % tables_->params.delta == 0;
}

std::uint32_t Field::subfield_symbol(FieldElement x) const {
    if (!in_subfield(x)) {
        throw Error(ErrorCode::CoefficientOutsideSubfield, "element not in F_q: " + to_string(x));
    }
    if (x.is_zero()) return 0;
    return 1 + static_cast<std::uint32_t>(x.log() / tables_->params.delta);
}

FieldElement Field::from_subfield_symbol(std::uint32_t s) const {
    if (s >= tables_->params.q) throw Error(ErrorCode::InvalidArgument, "subfield symbol out of range");
    if (s == 0) return FieldElement::zero();
    return FieldElement::from_log(static_cast<std::uint32_t>((s - 1) * tables_->params.delta));
}

std::string Field::to_string(FieldElement x) const {
    if (x.is_zero()) return "0";
    return "g^" + std::to_string(x.log());
}

}  // namespace cyclocode
