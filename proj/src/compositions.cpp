#include "tansum/compositions.hpp"

#include <cmath>
#include <vector>

namespace tansum {

BigInt compositions_positive(std::int64_t m, std::int64_t parts, std::int64_t s) {
    if (m < 0 || parts < 1 || s < 0) throw std::domain_error("compositions_positive: bad arguments");
    if (s == 0 || m < parts) return 0;
    const std::int64_t j_max = std::min(parts, (m - parts) / s);
    BigInt acc = 0;
    for (std::int64_t j = 0; j <= j_max; ++j) {
        const BigInt term = binomial(parts, j) * binomial(m - s * j - 1, parts - 1);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

BigInt compositions_nonneg(std::int64_t m, std::int64_t parts, std::int64_t s) {
    if (m < 0 || parts < 1 || s < 0) throw std::domain_error("compositions_nonneg: bad arguments");
    if (m == 0) return 1;
    if (s == 0) return 0;  // m > 0 with all-zero parts
    if (s == 1) {
        return (m > parts) ? BigInt(0) : binomial(parts, m);
    }
    if (m >= parts) return compositions_positive(m + parts, parts, s + 1);
    // 1 <= m < parts: choose which nu parts are positive
    BigInt acc = 0;
    for (std::int64_t nu = 1; nu <= m; ++nu)
        acc += compositions_positive(m, nu, s) * binomial(parts, parts - nu);
    return acc;
}

BigInt compositions_oracle(std::int64_t m, std::int64_t parts, std::int64_t s, bool allow_zero,
                           std::uint64_t state_budget) {
    if (m < 0 || parts < 1 || s < 0) throw std::domain_error("compositions_oracle: bad arguments");
    const double choices = static_cast<double>(s) + (allow_zero ? 1.0 : 0.0);
    if (choices > 1.0 &&
        static_cast<double>(parts) * std::log(choices) > std::log(static_cast<double>(state_budget))) {
        throw resource_error("compositions_oracle: state space exceeds budget");
    }
    const std::int64_t lo = allow_zero ? 0 : 1;
    // plain depth-first count with sum-range pruning
    auto count = [&](auto&& self, std::int64_t rest, std::int64_t k) -> BigInt {
        if (k == 0) return rest == 0 ? 1 : 0;
        if (rest < lo * k || rest > s * k) return 0;
        BigInt acc = 0;
        for (std::int64_t d = lo; d <= std::min(s, rest); ++d)
            acc += self(self, rest - d, k - 1);
        return acc;
    };
    return count(count, m, parts);
}

bool is_multiple_by_digits(std::uint64_t value, int n) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("is_multiple_by_digits: n must be odd and >= 3");
    const std::uint64_t base = static_cast<std::uint64_t>(n - 1);
    std::int64_t even_sum = 0, odd_sum = 0;
    bool even_pos = true;
    for (std::uint64_t r = value; r != 0; r /= base) {
        (even_pos ? even_sum : odd_sum) += static_cast<std::int64_t>(r % base);
        even_pos = !even_pos;
    }
    return (odd_sum - even_sum) % n == 0;
}

SigmaCombParts sigma_combinatorial_parts(int n, int p) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("sigma_combinatorial: n must be odd and >= 3");
    if (p < 1) throw std::domain_error("sigma_combinatorial: p must be >= 1");
    const std::int64_t top = static_cast<std::int64_t>(n - 2) * p;

    std::vector<BigInt> row(top + 1);
    for (std::int64_t j = 0; j <= top; ++j) row[j] = compositions_nonneg(j, p, n - 2);

    SigmaCombParts parts{0, 0};
    for (std::int64_t j = 0; j <= top; ++j) {
        parts.square_total += row[j] * row[j];
        for (std::int64_t k = 1; j + n * k <= top; ++k) {
            const BigInt term = 2 * row[j] * row[j + n * k];
            parts.cross_total += (k % 2 == 0) ? term : -term;
        }
    }
    return parts;
}

BigInt sigma_combinatorial(int n, int p) {
    const SigmaCombParts parts = sigma_combinatorial_parts(n, p);
    // n is odd, so the bracketed total itself must be even
    return exact_div(n * (parts.square_total + parts.cross_total), 2, "sigma_combinatorial");
}

bool verify_delta_identity(int n_max, int m_max) {
    if (n_max < 1 || m_max < 1) throw std::domain_error("verify_delta_identity: ranges must be >= 1");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t m = n; m <= m_max; ++m) {
            BigInt acc = 0;
            for (std::int64_t j = 0; j <= std::min(n, m - n); ++j) {
                const BigInt term = binomial(n, j) * binomial(m - j - 1, n - 1);
                acc += (j % 2 == 0) ? term : -term;
            }
            if (acc != (m == n ? 1 : 0)) return false;
        }
    }
    return true;
}

bool verify_binomial_convolution(int p_max) {
    if (p_max < 3) throw std::domain_error("verify_binomial_convolution: p_max must be >= 3");
    for (std::int64_t p = 1; p <= p_max; ++p) {
        for (std::int64_t k = 1; k <= p / 3; ++k) {
            BigInt acc = 0;
            for (std::int64_t j = 0; j <= p - 3 * k; ++j) acc += binomial(p, j) * binomial(p, 3 * k + j);
            if (acc != binomial(2 * p, p + 3 * k)) return false;
        }
    }
    return true;
}

bool verify_alternating_central_binomial(int p_max) {
    if (p_max < 1) throw std::domain_error("verify_alternating_central_binomial: p_max must be >= 1");
    for (std::int64_t p = 1; p <= p_max; ++p) {
        BigInt lhs = 0;
        for (std::int64_t k = 1; k <= p / 3; ++k) {
            const BigInt term = binomial(2 * p, p + 3 * k);
            lhs += (k % 2 == 1) ? term : -term;
        }
        const BigInt rhs =
            exact_div(binomial(2 * p, p), 2, "verify_alternating_central_binomial") - pow_bigint(3, static_cast<unsigned>(p - 1));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace tansum
