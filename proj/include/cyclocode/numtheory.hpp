#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclocode {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors of n in ascending order (n >= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    std::uint32_t t;
};

/// Decomposes q = p^t; nullopt if q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

/// base^exp, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX) noexcept;

/// Representative of a in [0, m).
constexpr std::int64_t mod_normalize(std::int64_t a, std::int64_t m) noexcept {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Exact quotient; throws InternalConsistency when den does not divide num.
std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what);

}  // namespace cyclocode
