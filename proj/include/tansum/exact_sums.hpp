#pragma once

#include <vector>

#include "tansum/numeric.hpp"

namespace tansum {

/// Coefficients of the characteristic equation
///   lambda^m - C(n,2) lambda^(m-1) + C(n,4) lambda^(m-2) - ... + (-1)^m C(n,n-1) = 0,
/// m = (n-1)/2, whose roots are tan^2(k*pi/n), k = 1..m. Stored unsigned;
/// consumers apply the alternating signs.
struct CharPolyCoeffs {
    int n = 0;                // odd, >= 3
    std::vector<BigInt> e;    // e[j-1] = C(n, 2j), j = 1..(n-1)/2

    int order() const { return static_cast<int>(e.size()); }
};

/// Builds the coefficient vector for odd n >= 3. Throws std::domain_error otherwise.
CharPolyCoeffs char_poly_coeffs(int n);

/// Per-n memo for sigma(n, p), populated in increasing p.
/// Not shared between threads; recomputation from scratch gives identical values.
class SigmaCache {
public:
    explicit SigmaCache(int n);

    int n() const { return n_; }

    /// sigma(n, p); extends the memo as needed. p >= 0.
    const BigInt& value(int p);

private:
    int n_;
    CharPolyCoeffs coeffs_;       // empty for n == 1
    std::vector<BigInt> values_;  // values_[p] = sigma(n_, p)
};

/// Tangent power sum sigma(n,p) = sum_{k=1..(n-1)/2} tan^(2p)(pi k / n), exactly.
///
/// n = 1 gives 0 (empty sum); p = 0 gives (n-1)/2. For 1 <= p <= m = (n-1)/2 the
/// value comes from Newton's identities over the characteristic coefficients,
///   sigma(n,p) = sum_{k=1..p-1} (-1)^(k-1) e_k sigma(n,p-k) + (-1)^(p-1) p e_p,
/// and for p > m from the order-m linear recurrence with the same coefficients.
BigInt sigma(int n, int p);

/// 2*sigma(n,p) / (n(n-1)). The division is not always exact: for example
/// 2*sigma(7,2) = 742 is not a multiple of 42. Inexact division throws
/// invariant_violation rather than rounding.
BigInt sigma_star(int n, int p);

enum class TrigForm { tangent, cotangent };

/// Direct floating-point summation of the defining sum (tangent form) or of the
/// reindexed cotangent form sum_{l=0..m-1} cot^(2p)((2l+1) pi / (2n)).
/// Only a cross-check; values above ~2^53 lose integer resolution.
double sigma_float(int n, int p, TrigForm form);

/// Evaluates the alternating characteristic polynomial at lambda_k = tan^2(k pi/n)
/// for every k; true iff each residual is < 1e-6 relative to the largest monomial
/// term. Requires odd 3 <= n <= 51.
bool verify_char_roots(int n);

}  // namespace tansum
