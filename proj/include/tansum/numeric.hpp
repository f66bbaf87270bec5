#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tansum {

/// Arbitrary-precision signed integer; value type for all exact sums and counts.
using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational; Bernoulli numbers, interpolation, leading coefficients.
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a step that is provably exact (exact division, integrality of a
/// coefficient, containment of a computed bound) fails. Always a bug or a
/// falsified mathematical claim; never caught internally.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown when an enumeration would exceed the configured budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binomial coefficient C(n, k). Zero for k < 0 or k > n; requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// base^exp for nonnegative exponents.
BigInt pow_bigint(const BigInt& base, unsigned exp);

/// Exact quotient num/den. Throws invariant_violation when den does not divide
/// num; `context` names the failed step in the message.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

/// Natural log of a positive BigInt, relative precision ~1e-15
/// (leading 63 bits + exponent; no arbitrary-precision floats involved).
double log_bigint(const BigInt& x);

}  // namespace tansum
