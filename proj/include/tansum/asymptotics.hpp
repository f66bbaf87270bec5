#pragma once

#include <utility>

#include "tansum/numeric.hpp"

namespace tansum {

/// The growth exponent lambda_n = ln(cot(pi/2n)) / ln(n-1) with its proven
/// enclosure lower = 1 - ln(pi/2)/ln(n-1), upper = lower + 1/((n-1) ln(n-1)).
struct LambdaRecord {
    int n = 0;
    double lambda = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
};

/// Computes lambda_n and its bounds for odd n >= 3; containment failure throws
/// invariant_violation.
LambdaRecord lambda_n(int n);

/// True iff lambda_3 < lambda_5 < ... < lambda_{n_max} strictly, margin 1e-12.
bool verify_lambda_monotonic(int n_max);

/// sigma(n,p) / cot^(2p)(pi/2n), evaluated in the log domain
/// (exp(ln sigma - 2p ln cot)); tends to 1 as p grows; equals 1 for n = 3
/// up to double rounding since sigma(3,p) = 3^p = cot^(2p)(pi/6).
double asymptotic_ratio(int n, int p);

/// The limsup/liminf constants of S_3(3y) y^-lambda:
/// ((55/3)(3/65)^lambda, 2 sqrt(3)/3) with lambda = ln 3/ln 4.
std::pair<double, double> coquet_constants();

}  // namespace tansum
