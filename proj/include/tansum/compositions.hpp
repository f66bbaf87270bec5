#pragma once

#include <cstdint>

#include "tansum/numeric.hpp"

namespace tansum {

/// Number of compositions of m into `parts` positive parts each <= s, via the
/// alternating binomial sum
///   C(m,n,s) = sum_j (-1)^j C(n,j) C(m - s j - 1, n - 1),  j = 0..min(n, (m-n)/s).
/// Zero when m < parts or m > parts*s.
BigInt compositions_positive(std::int64_t m, std::int64_t parts, std::int64_t s);

/// Number of compositions of m into `parts` nonnegative parts each <= s, by the
/// five-case reduction to compositions_positive. Accepts s = 0 (1 if m == 0, else 0).
BigInt compositions_nonneg(std::int64_t m, std::int64_t parts, std::int64_t s);

/// Exhaustive count of part-sequences; ground truth for both formulas above.
/// Refuses grids larger than `state_budget` enumeration states.
BigInt compositions_oracle(std::int64_t m, std::int64_t parts, std::int64_t s, bool allow_zero,
                           std::uint64_t state_budget = 10'000'000);

/// Digit-balance divisibility test: n | value iff the digit sums of `value` in
/// base n-1 taken on odd and on even positions are congruent mod n.
bool is_multiple_by_digits(std::uint64_t value, int n);

/// Intermediate totals of the combinatorial sigma formula: the sum of squared
/// composition counts and the signed doubled cross-term sum.
struct SigmaCombParts {
    BigInt square_total;
    BigInt cross_total;
};

/// The two partial totals of sigma_combinatorial; for (n,p) = (5,2) they are 44 and -8.
SigmaCombParts sigma_combinatorial_parts(int n, int p);

/// Explicit combinatorial formula
///  sigma(n,p) = n/2 * sum_{j=0..(n-2)p} [ C0(j,p,n-2)^2
///             + 2 sum_{k>=1, j+nk<=(n-2)p} (-1)^k C0(j,p,n-2) C0(j+nk,p,n-2) ].
/// The bracketed total is even; computed as n*total then halved with an
/// exactness check.
BigInt sigma_combinatorial(int n, int p);

/// sum_j (-1)^j C(n,j) C(m-j-1, n-1) == delta_{m,n} over 1 <= n <= n_max, n <= m <= m_max.
bool verify_delta_identity(int n_max, int m_max);

/// sum_j C(p,j) C(p,3k+j) == C(2p, p+3k) over 1 <= k <= p/3, p <= p_max.
bool verify_binomial_convolution(int p_max);

/// sum_k (-1)^(k-1) C(2p, p+3k) == C(2p,p)/2 - 3^(p-1) for p = 1..p_max.
bool verify_alternating_central_binomial(int p_max);

}  // namespace tansum
