#include "cyclocode/numtheory.hpp"

#include "cyclocode/error.hpp"

#include <string>

namespace cyclocode {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t r : prime_factors(n)) result = result / r * (r - 1);
    return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    std::uint32_t t = 0;
    while (q % p == 0) {
        q /= p;
        ++t;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, t};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    if (r > limit) return std::nullopt;
    return r;
}

namespace {

__extension__ using u128 = unsigned __int128;

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    u128 r = 1;
    u128 b = base % m;
    while (exp) {
        if (exp & 1) r = r * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw Error(ErrorCode::InternalConsistency,
                    std::string("non-exact division in ") + what + ": " +
                        std::to_string(num) + " / " + std::to_string(den));
    }
    return num / den;
}

}  // namespace cyclocode
