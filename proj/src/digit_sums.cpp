#include "tansum/digit_sums.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "tansum/exact_sums.hpp"

namespace tansum {

namespace {

// Signed contribution of one multiple: +1 for even digit sum, -1 for odd.
int parity_sign(std::uint64_t r, unsigned base) {
    return (digit_sum(r, base) & 1u) ? -1 : 1;
}

// S_3(x) in machine integers; |S_3(x)| < 5 x^0.8 fits int64 for any uint64 x.
std::int64_t s3_brute_small(std::uint64_t x) {
    std::int64_t acc = 0;
    for (std::uint64_t r = 0; r < x; r += 3)
        acc += (std::popcount(r) & 1u) ? -1 : 1;
    return acc;
}

std::array<std::int64_t, 24> s3_base_cases() {
    std::array<std::int64_t, 24> base{};
    for (std::uint64_t x = 0; x < 24; ++x) base[x] = s3_brute_small(x);
    return base;
}

std::int64_t s3_fast_i64(std::uint64_t x, const Period24Table& table,
                         const std::array<std::int64_t, 24>& base) {
    if (x < 24) return base[x];
    const int sign = (std::popcount(x) & 1u) ? -1 : 1;
    return 3 * s3_fast_i64(x / 4, table, base) + sign * table.t[x % 24];
}

}  // namespace

unsigned digit_sum(std::uint64_t r, unsigned b) {
    if (b < 2) throw std::domain_error("digit_sum: base must be >= 2");
    unsigned acc = 0;
    while (r != 0) {
        acc += static_cast<unsigned>(r % b);
        r /= b;
    }
    return acc;
}

NewmanStat newman_sum(int n, std::uint64_t x, std::uint64_t budget) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("newman_sum: n must be odd and >= 3");
    if (x > budget) {
        throw resource_error("newman_sum: x = " + std::to_string(x) +
                             " exceeds the enumeration budget " + std::to_string(budget) +
                             "; use newman_sum_fast (x = (n-1)^(2p)) or s3_fast (n = 3)");
    }
    NewmanStat stat;
    stat.n = n;
    stat.x = x;
    const unsigned base = static_cast<unsigned>(n - 1);
    for (std::uint64_t r = 0; r < x; r += static_cast<unsigned>(n)) {
        if (parity_sign(r, base) > 0)
            ++stat.even_count;
        else
            ++stat.odd_count;
    }
    stat.s_value = BigInt(stat.even_count) - BigInt(stat.odd_count);
    return stat;
}

BigInt newman_sum_fast(int n, int p) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("newman_sum_fast: n must be odd and >= 3");
    if (p < 1) throw std::domain_error("newman_sum_fast: p must be >= 1");
    return exact_div(2 * sigma(n, p), n, "newman_sum_fast");
}

bool verify_digit_sum_identity(int n, int p, std::uint64_t budget) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("verify_digit_sum_identity: n must be odd and >= 3");
    if (p < 1) throw std::domain_error("verify_digit_sum_identity: p must be >= 1");
    const BigInt x_big = pow_bigint(n - 1, 2 * static_cast<unsigned>(p));
    if (x_big > budget) {
        throw resource_error("verify_digit_sum_identity: (n-1)^(2p) = " + x_big.str() +
                             " exceeds the enumeration budget " + std::to_string(budget));
    }
    const NewmanStat stat = newman_sum(n, x_big.convert_to<std::uint64_t>(), budget);
    return 2 * sigma(n, p) == n * stat.s_value;
}

Period24Table derive_period24_table(std::uint64_t verify_up_to) {
    if (verify_up_to < 96) throw std::domain_error("derive_period24_table: verify_up_to must be >= 96");

    // Prefix sums S_3(0..verify_up_to) in one incremental pass.
    std::vector<std::int64_t> s3(verify_up_to + 1, 0);
    std::int64_t run = 0;
    for (std::uint64_t x = 1; x <= verify_up_to; ++x) {
        const std::uint64_t r = x - 1;
        if (r % 3 == 0) run += (std::popcount(r) & 1u) ? -1 : 1;
        s3[x] = run;
    }

    Period24Table table;
    std::array<bool, 24> seen{};
    for (std::uint64_t x = 24; x <= verify_up_to; ++x) {
        const int sign = (std::popcount(x) & 1u) ? -1 : 1;
        const std::int64_t d = sign * (s3[x] - 3 * s3[x / 4]);
        const std::size_t idx = x % 24;
        if (!seen[idx]) {
            if (d < -2 || d > 2) {
                throw invariant_violation("derive_period24_table: entry " + std::to_string(d) +
                                          " at x = " + std::to_string(x) + " outside {-2..2}");
            }
            table.t[idx] = static_cast<int>(d);
            seen[idx] = true;
        } else if (table.t[idx] != d) {
            throw invariant_violation("derive_period24_table: period-24 violated at x = " +
                                      std::to_string(x) + " (got " + std::to_string(d) +
                                      ", expected " + std::to_string(table.t[idx]) + ")");
        }
    }
    return table;
}

BigInt s3_fast(std::uint64_t x, const Period24Table& table) {
    static const std::array<std::int64_t, 24> base = s3_base_cases();
    return BigInt(s3_fast_i64(x, table, base));
}

NewmanBoundsReport check_newman_bounds(std::uint64_t x_max) {
    if (x_max < 3) throw std::domain_error("check_newman_bounds: x_max must be >= 3");

    const Period24Table table = derive_period24_table(std::max<std::uint64_t>(96, std::min<std::uint64_t>(x_max, 10000)));
    static const std::array<std::int64_t, 24> base = s3_base_cases();

    const double lambda = std::log(3.0) / std::log(4.0);
    const double coquet_lo = 2.0 * std::sqrt(3.0) / 3.0;
    const double coquet_hi = (55.0 / 3.0) * std::pow(3.0 / 65.0, lambda);
    const double slack = 1e-9;  // absorbs double rounding at the equality points

    NewmanBoundsReport rep;
    rep.newman_min_ratio = 1e300;
    rep.newman_max_ratio = -1e300;
    rep.coquet_min_ratio = 1e300;
    rep.coquet_max_ratio = -1e300;

    for (std::uint64_t x = 1; x <= x_max; ++x) {
        const std::int64_t s = s3_fast_i64(x, table, base);
        ++rep.newman_checks;
        if (s <= 0) rep.violations.push_back({"s3-positive", x, static_cast<double>(s)});
        const double ratio = static_cast<double>(s) * std::pow(static_cast<double>(x), -lambda);
        if (ratio < rep.newman_min_ratio) { rep.newman_min_ratio = ratio; rep.newman_argmin = x; }
        if (ratio > rep.newman_max_ratio) { rep.newman_max_ratio = ratio; rep.newman_argmax = x; }
        if (!(ratio > 0.05 && ratio < 5.0))
            rep.violations.push_back({"newman-envelope", x, ratio});
    }

    for (std::uint64_t y = 1; y <= x_max / 3; ++y) {
        const std::int64_t s = s3_fast_i64(3 * y, table, base);
        ++rep.coquet_checks;
        const double ratio = static_cast<double>(s) * std::pow(static_cast<double>(y), -lambda);
        if (ratio < rep.coquet_min_ratio) { rep.coquet_min_ratio = ratio; rep.coquet_argmin = y; }
        if (ratio > rep.coquet_max_ratio) { rep.coquet_max_ratio = ratio; rep.coquet_argmax = y; }
        if (!(ratio >= coquet_lo - slack && ratio <= coquet_hi + slack))
            rep.violations.push_back({"coquet-bounds", y, ratio});
    }
    return rep;
}

}  // namespace tansum
