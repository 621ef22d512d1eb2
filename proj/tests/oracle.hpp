#pragma once

// Naive reference arithmetic for the test suites. Elements of F_{p^m} are
// coefficient vectors modulo a monic f; nothing here uses logarithm tables.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint64_t>;  // constant term first

class NaiveField {
public:
    using Elem = std::vector<std::uint64_t>;  // exactly m coefficients

    NaiveField(std::uint64_t p, Poly modulus) : p_(p), f_(std::move(modulus)), m_(f_.size() - 1) {
        size_ = 1;
        for (std::size_t i = 0; i < m_; ++i) size_ *= p_;
    }

    /// First monic primitive polynomial of degree m, comparing the
    /// coefficient tuples (c_0, c_1, ..., c_{m-1}) lexicographically.
    static NaiveField first_primitive(std::uint64_t p, std::size_t m) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly f(m + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = m; i-- > 0;) {  // c_{m-1} varies fastest
                f[i] = c % p;
                c /= p;
            }
            f[m] = 1;
            NaiveField field(p, f);
            if (field.x_is_primitive()) return field;
        }
        throw std::runtime_error("no primitive polynomial");
    }

    std::uint64_t p() const { return p_; }
    std::size_t degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    const Poly& modulus() const { return f_; }

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem x() const {
        Elem e = zero();
        if (m_ == 1) {
            e[0] = (p_ - f_[0]) % p_;
        } else {
            e[1] = 1;
        }
        return e;
    }

    /// Element whose base-p digits are the coefficients.
    Elem from_index(std::uint64_t idx) const {
        Elem e(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            e[i] = idx % p_;
            idx /= p_;
        }
        return e;
    }
    std::uint64_t index(const Elem& e) const {
        std::uint64_t idx = 0;
        for (std::size_t i = m_; i-- > 0;) idx = idx * p_ + e[i];
        return idx;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = (p_ - a[i]) % p_;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<std::uint64_t> prod(2 * m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        for (std::size_t d = 2 * m_ - 1; d >= m_; --d) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - c) * f_[i]) % p_;
            }
        }
        return Elem(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m_));
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (auto c : a) {
            if (c) return false;
        }
        return true;
    }

    /// Multiplicative order by repeated multiplication.
    std::uint64_t order(const Elem& a) const {
        if (is_zero(a)) return 0;
        Elem y = a;
        for (std::uint64_t n = 1; n <= size_; ++n) {
            if (y == one()) return n;
            y = mul(y, a);
        }
        return 0;
    }

    bool x_is_primitive() const {
        if (f_[0] == 0) return false;
        return order(x()) == size_ - 1;
    }

    /// a + a^s + ... + a^{s^{r-1}} with s = p^t, r = m/t.
    Elem trace(const Elem& a, std::size_t t) const {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < t; ++i) s *= p_;
        Elem sum = zero();
        Elem term = a;
        for (std::size_t i = 0; i < m_ / t; ++i) {
            sum = add(sum, term);
            term = pow(term, s);
        }
        return sum;
    }
    std::uint64_t absolute_trace(const Elem& a) const {
        const Elem t = trace(a, 1);
        for (std::size_t i = 1; i < m_; ++i) {
            if (t[i] != 0) throw std::runtime_error("trace outside F_p");
        }
        return t[0];
    }

    bool is_nonzero_square(const Elem& a) const {
        return !is_zero(a) && pow(a, (size_ - 1) / 2) == one();
    }

private:
    std::uint64_t p_;
    Poly f_;
    std::size_t m_;
    std::uint64_t size_;
};

/// Order-2 cyclotomic number (i,j): #{x in class i : x + 1 in class j},
/// class 0 = nonzero squares.
inline std::uint64_t cyclotomic_number(const NaiveField& F, int i, int j) {
    std::uint64_t count = 0;
    for (std::uint64_t idx = 1; idx < F.size(); ++idx) {
        const auto x = F.from_index(idx);
        const auto y = F.add(x, F.one());
        if (F.is_zero(y)) continue;
        if ((F.is_nonzero_square(x) ? 0 : 1) == i && (F.is_nonzero_square(y) ? 0 : 1) == j) ++count;
    }
    return count;
}

/// Gaussian periods from trace histograms over squares / non-squares.
/// Returns false when a sum is not a rational integer.
inline bool gaussian_periods(const NaiveField& F, std::int64_t& eta0, std::int64_t& eta1) {
    std::vector<std::int64_t> h0(F.p(), 0), h1(F.p(), 0);
    for (std::uint64_t idx = 1; idx < F.size(); ++idx) {
        const auto x = F.from_index(idx);
        auto& h = F.is_nonzero_square(x) ? h0 : h1;
        ++h[F.absolute_trace(x)];
    }
    auto reduce = [](const std::vector<std::int64_t>& h, std::int64_t& out) {
        for (std::size_t c = 2; c < h.size(); ++c) {
            if (h[c] != h[1]) return false;
        }
        out = h[0] - h[1];
        return true;
    };
    return reduce(h0, eta0) && reduce(h1, eta1);
}

/// Weight distribution of {(Tr_{q^k/q}(alpha g^{a1 i} + beta g^{a2 i}))_{i<n}}
/// with g the oracle's own primitive element x; weight -> count.
inline std::map<std::uint64_t, std::uint64_t> weight_distribution(const NaiveField& F, std::size_t t,
                                                                  std::uint64_t a1, std::uint64_t a2,
                                                                  std::uint64_t n) {
    const auto g = F.x();
    std::vector<NaiveField::Elem> p1, p2;
    for (std::uint64_t i = 0; i < n; ++i) {
        p1.push_back(F.pow(g, a1 * i));
        p2.push_back(F.pow(g, a2 * i));
    }
    std::map<std::uint64_t, std::uint64_t> dist;
    for (std::uint64_t ai = 0; ai < F.size(); ++ai) {
        const auto alpha = F.from_index(ai);
        for (std::uint64_t bi = 0; bi < F.size(); ++bi) {
            const auto beta = F.from_index(bi);
            std::uint64_t w = 0;
            for (std::uint64_t i = 0; i < n; ++i) {
                w += !F.is_zero(F.trace(F.add(F.mul(alpha, p1[i]), F.mul(beta, p2[i])), t));
            }
            ++dist[w];
        }
    }
    return dist;
}

}  // namespace oracle
