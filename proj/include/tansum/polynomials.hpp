#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tansum/numeric.hpp"

namespace tansum {

/// Dense polynomial with exact rational coefficients, ascending powers.
struct RationalPolynomial {
    std::vector<BigRational> coeffs;

    int degree() const;
    BigRational eval(const BigRational& x) const;
    const BigRational& coeff(int k) const;  // zero beyond degree
};

/// Integer-valued polynomial in the binomial basis: sum_k coeffs[k] * C(n,k).
struct BinomialPolynomial {
    std::map<int, BigInt> coeffs;  // nonzero entries only

    int degree() const;
    BigInt eval(std::int64_t n) const;
};

/// Exact Bernoulli number B_k (B_1 = -1/2 convention; odd k > 1 give 0),
/// via sum_{j=0..k} C(k+1,j) B_j = 0.
BigRational bernoulli(int k);

/// Leading coefficient of sigma(.,p) as a polynomial in n:
/// 2^(2p-1) (2^(2p) - 1) |B_2p| / (2p)!.
BigRational leading_coefficient(int p);

enum class SigmaTarget { sigma, sigma_star };

/// Reconstructs sigma(.,p) (degree 2p) or sigma*(.,p) = 2 sigma/(n(n-1))
/// (degree 2p-2) by exact Lagrange interpolation at odd nodes. sigma uses
/// n = 1, 3, ..., 4p+1; sigma* divides pointwise first and skips n = 1 where
/// the quotient is 0/0. The interpolant is validated at held-out nodes
/// 4p+3 and 4p+5; a mismatch (falsified degree claim) throws invariant_violation.
RationalPolynomial interpolate_sigma_poly(int p, SigmaTarget target);

/// Converts via iterated forward differences at 0: coeffs[k] = Delta^k poly(0).
/// Any non-integer difference means the input was not integer-valued; throws
/// invariant_violation.
BinomialPolynomial to_binomial_basis(const RationalPolynomial& poly);

/// Checks, exactly, both forms of the boundary identity at p = (n-1)/2:
///   sum_{j=0..(n-1)/2} (-1)^j C(n,2j+1) S_n((n-1)^(2j)) == 1
/// (S_n(1) = 1 at j = 0, S_n((n-1)^(2j)) = 2 sigma(n,j)/n for j >= 1), and
///   sum_{j=1..(n-1)/2} (-1)^(j-1) C(n,2j+1) sigma(n,j) == C(n,2).
bool verify_boundary_identity(int n);

/// sum_{k=0..(n-1)/2} (-1)^k C(n,2k) sigma(n, p-k) == 0, for p >= (n+1)/2.
bool verify_recurrence_relation(int n, int p);

/// "c0 + c1*n + c2*n^2" style rendering with exact rational coefficients.
std::string format_monomial(const RationalPolynomial& poly);

/// "C(n,2)+6C(n,3)+4C(n,4)" style rendering.
std::string format_binomial(const BinomialPolynomial& poly);

}  // namespace tansum
