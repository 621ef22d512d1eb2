#include "cyclocode/cyclotomy.hpp"

#include "cyclocode/error.hpp"
#include "cyclocode/numtheory.hpp"

#include <string>

namespace cyclocode {

CyclotomicClass cyclotomic_class(const Field& field, std::int64_t i, std::uint64_t m) {
    const std::uint32_t n = field.group_order();
    if (m == 0 || n % m != 0) {
        throw Error(ErrorCode::OrderDoesNotDivide,
                    std::to_string(m) + " does not divide " + std::to_string(n));
    }
    const auto index = static_cast<std::uint32_t>(mod_normalize(i, static_cast<std::int64_t>(m)));
    return CyclotomicClass(index, static_cast<std::uint32_t>(m), n);
}

std::uint64_t cyclotomic_number_bruteforce(const Field& field, std::int64_t i, std::int64_t j,
                                           std::uint64_t m) {
    const CyclotomicClass from = cyclotomic_class(field, i, m);
    const CyclotomicClass to = cyclotomic_class(field, j, m);
    std::uint64_t count = 0;
    for (FieldElement x : from.members()) {
        if (to.contains(field.add(x, field.one()))) ++count;
    }
    return count;
}

std::int64_t cyclotomic_number_order2_closed(std::uint64_t q, std::uint32_t k, int i, int j) {
    const auto order = checked_pow(q, k, std::uint64_t{1} << 62);
    if (!order) throw Error(ErrorCode::InvalidArgument, "q^k out of range");
    const auto qk = static_cast<std::int64_t>(*order);
    if ((qk - 1) % 4 != 0) {
        throw Error(ErrorCode::HypothesisViolated, "4 does not divide q^k - 1");
    }
    if (i < 0 || i > 1 || j < 0 || j > 1) {
        throw Error(ErrorCode::InvalidArgument, "order-2 indices must be 0 or 1");
    }
    if (i == 0 && j == 0) return (qk - 5) / 4;
    return (qk - 1) / 4;
}

CyclotomicIntegerSum& CyclotomicIntegerSum::operator+=(const CyclotomicIntegerSum& other) {
    if (counts.size() != other.counts.size()) {
        throw Error(ErrorCode::InvalidArgument, "character sums over different prime fields");
    }
    for (std::size_t c = 0; c < counts.size(); ++c) counts[c] += other.counts[c];
    return *this;
}

std::optional<std::int64_t> CyclotomicIntegerSum::reduce() const {
    if (counts.empty()) return std::nullopt;
    if (counts.size() == 1) return counts[0];
    for (std::size_t c = 2; c < counts.size(); ++c) {
        if (counts[c] != counts[1]) return std::nullopt;
    }
    return counts[0] - counts[1];
}

GaussianPeriods gaussian_periods_closed(std::uint64_t p, std::uint32_t t, std::uint32_t k) {
    if (!is_prime(p) || p == 2) {
        throw Error(ErrorCode::HypothesisViolated, "Gaussian periods need an odd prime p");
    }
    const std::uint64_t m = std::uint64_t{t} * k;
    if (m == 0 || m % 2 != 0) {
        throw Error(ErrorCode::OddDegree, "tk must be even for integral order-2 periods");
    }
    const auto root = checked_pow(p, m / 2, std::uint64_t{1} << 62);  // q^{k/2}
    if (!root) throw Error(ErrorCode::InvalidArgument, "q^{k/2} out of range");
    const auto s = static_cast<std::int64_t>(*root);

    const std::int64_t sign = (m - 1) % 2 == 0 ? 1 : -1;  // (-1)^{tk-1}
    std::int64_t eta0 = 0;
    if (p % 4 == 1) {
        eta0 = exact_div(-1 + sign * s, 2, "eta_0");
    } else {
        const std::int64_t i_pow = (m / 2) % 2 == 0 ? 1 : -1;  // (sqrt(-1))^{tk}
        eta0 = exact_div(-1 + sign * i_pow * s, 2, "eta_0");
    }
    return GaussianPeriods{eta0, -1 - eta0};
}

std::optional<GaussianPeriods> gaussian_periods_from_character_sums(const Field& field) {
    if (field.group_order() % 2 != 0) return std::nullopt;
    const auto eta0 = character_sum(field, cyclotomic_class(field, 0, 2).members()).reduce();
    const auto eta1 = character_sum(field, cyclotomic_class(field, 1, 2).members()).reduce();
    if (!eta0 || !eta1) return std::nullopt;
    return GaussianPeriods{*eta0, *eta1};
}

}  // namespace cyclocode
