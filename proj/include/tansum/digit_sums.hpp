#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tansum/numeric.hpp"

namespace tansum {

/// Default cap on enumeration size (candidates scanned) for brute-force sums.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Sum of the base-b digits of r. b >= 2, else std::domain_error.
unsigned digit_sum(std::uint64_t r, unsigned b);

/// One digit-sum scan result: S_n(x) with its parity breakdown.
struct NewmanStat {
    int n = 0;
    std::uint64_t x = 0;
    BigInt s_value;                  // even_count - odd_count
    std::uint64_t even_count = 0;    // multiples of n below x with even digit sum in base n-1
    std::uint64_t odd_count = 0;
};

/// S_n(x) = sum over multiples r of n in [0, x) of (-1)^(digit sum of r in base n-1),
/// by direct enumeration. Throws resource_error when x exceeds the budget.
NewmanStat newman_sum(int n, std::uint64_t x, std::uint64_t budget = kDefaultEnumerationBudget);

/// S_n((n-1)^(2p)) = 2 sigma(n,p) / n, exactly and without enumeration. p >= 1.
BigInt newman_sum_fast(int n, int p);

/// Checks 2 sigma(n,p) == n * S_n((n-1)^(2p)) with the right side enumerated.
bool verify_digit_sum_identity(int n, int p, std::uint64_t budget = kDefaultEnumerationBudget);

/// d(x) = (-1)^(s_2(x)) (S_3(x) - 3 S_3(floor(x/4))) as a function of x mod 24.
struct Period24Table {
    std::array<int, 24> t{};
};

/// Derives the period-24 table by brute force over x = 24..verify_up_to
/// (verify_up_to >= 96), asserting that d(x) depends only on x mod 24.
/// A periodicity violation throws invariant_violation.
Period24Table derive_period24_table(std::uint64_t verify_up_to);

/// S_3(x) via the recursion S_3(x) = 3 S_3(floor(x/4)) + (-1)^(s_2(x)) t[x mod 24],
/// with brute-forced base cases below 24.
BigInt s3_fast(std::uint64_t x, const Period24Table& table);

struct BoundViolation {
    std::string check;   // "s3-positive", "newman-envelope", "coquet-bounds"
    std::uint64_t at;    // x (newman checks) or y (coquet check, argument x = 3y)
    double ratio;        // the offending normalized ratio
};

/// Scan summary for check_newman_bounds. Violations are data, not exceptions:
/// near-bound float behaviour has to stay inspectable.
struct NewmanBoundsReport {
    std::uint64_t newman_checks = 0;
    std::uint64_t coquet_checks = 0;
    double newman_min_ratio = 0.0, newman_max_ratio = 0.0;  // S_3(x) x^-lambda over [1, x_max]
    double coquet_min_ratio = 0.0, coquet_max_ratio = 0.0;  // S_3(3y) y^-lambda over [1, x_max/3]
    std::uint64_t newman_argmin = 0, newman_argmax = 0;
    std::uint64_t coquet_argmin = 0, coquet_argmax = 0;
    std::vector<BoundViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// For 1 <= x <= x_max checks S_3(x) > 0 and 1/20 < S_3(x) x^-lambda < 5
/// (lambda = ln 3 / ln 4); for 1 <= y <= x_max/3 checks
/// 2 sqrt(3)/3 * y^lambda <= S_3(3y) <= (55/3)(3/65)^lambda * y^lambda,
/// with 1e-9 ratio slack absorbing double rounding. Uses s3_fast.
NewmanBoundsReport check_newman_bounds(std::uint64_t x_max);

}  // namespace tansum
