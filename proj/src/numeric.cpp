#include "tansum/numeric.hpp"

#include <cmath>
#include <numbers>

namespace tansum {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0) throw invariant_violation(std::string(context) + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw invariant_violation(std::string(context) + ": inexact division " + num.str() +
                                  " / " + den.str());
    }
    return q;
}

double log_bigint(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_bigint: nonpositive argument");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 62;
    const auto hi = static_cast<std::uint64_t>(x >> shift);
    return std::log(static_cast<double>(hi)) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace tansum
