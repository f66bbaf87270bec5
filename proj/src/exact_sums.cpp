#include "tansum/exact_sums.hpp"

#include <cmath>
#include <numbers>

namespace tansum {

namespace {

void require_odd(int n, int min, const char* who) {
    if (n < min || n % 2 == 0) {
        throw std::domain_error(std::string(who) + ": n must be odd and >= " +
                                std::to_string(min) + ", got " + std::to_string(n));
    }
}

}  // namespace

CharPolyCoeffs char_poly_coeffs(int n) {
    require_odd(n, 3, "char_poly_coeffs");
    CharPolyCoeffs c;
    c.n = n;
    const int m = (n - 1) / 2;
    c.e.reserve(m);
    for (int j = 1; j <= m; ++j) c.e.push_back(binomial(n, 2 * j));
    return c;
}

SigmaCache::SigmaCache(int n) : n_(n) {
    if (n != 1) {
        coeffs_ = char_poly_coeffs(n);  // validates n
    }
    values_.push_back(n == 1 ? BigInt(0) : BigInt((n - 1) / 2));
}

const BigInt& SigmaCache::value(int p) {
    if (p < 0) throw std::domain_error("sigma: negative p");
    if (n_ == 1) return values_.front();  // sigma(1, p) = 0, the sum is empty

    const int m = coeffs_.order();
    while (static_cast<int>(values_.size()) <= p) {
        const int q = static_cast<int>(values_.size());
        BigInt acc = 0;
        if (q <= m) {
            // Newton's identities bootstrap
            for (int k = 1; k < q; ++k) {
                const BigInt term = coeffs_.e[k - 1] * values_[q - k];
                acc += (k % 2 == 1) ? term : -term;
            }
            BigInt tail = q * coeffs_.e[q - 1];
            acc += (q % 2 == 1) ? tail : -tail;
        } else {
            // order-m linear recurrence
            for (int k = 1; k <= m; ++k) {
                const BigInt term = coeffs_.e[k - 1] * values_[q - k];
                acc += (k % 2 == 1) ? term : -term;
            }
        }
        values_.push_back(std::move(acc));
    }
    return values_[p];
}

BigInt sigma(int n, int p) {
    if (n != 1) require_odd(n, 1, "sigma");
    SigmaCache cache(n);
    return cache.value(p);
}

BigInt sigma_star(int n, int p) {
    require_odd(n, 3, "sigma_star");
    if (p < 1) throw std::domain_error("sigma_star: p must be >= 1");
    return exact_div(2 * sigma(n, p), BigInt(n) * (n - 1), "sigma_star");
}

double sigma_float(int n, int p, TrigForm form) {
    require_odd(n, 3, "sigma_float");
    if (p < 1) throw std::domain_error("sigma_float: p must be >= 1");
    const int m = (n - 1) / 2;
    double acc = 0.0;
    if (form == TrigForm::tangent) {
        for (int k = 1; k <= m; ++k)
            acc += std::pow(std::tan(k * std::numbers::pi / n), 2.0 * p);
    } else {
        for (int l = 0; l < m; ++l)
            acc += std::pow(std::tan((2 * l + 1) * std::numbers::pi / (2.0 * n)), -2.0 * p);
    }
    return acc;
}

bool verify_char_roots(int n) {
    require_odd(n, 3, "verify_char_roots");
    if (n > 51) throw std::domain_error("verify_char_roots: n > 51 exceeds float feasibility");
    const CharPolyCoeffs c = char_poly_coeffs(n);
    const int m = c.order();
    for (int k = 1; k <= m; ++k) {
        const double t = std::tan(k * std::numbers::pi / n);
        const double lambda = t * t;
        double value = 0.0, largest = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double coeff = (j == 0) ? 1.0 : c.e[j - 1].convert_to<double>();
            double term = coeff * std::pow(lambda, m - j);
            if (j % 2 == 1) term = -term;
            value += term;
            largest = std::max(largest, std::abs(term));
        }
        if (std::abs(value) >= 1e-6 * largest) return false;
    }
    return true;
}

}  // namespace tansum
