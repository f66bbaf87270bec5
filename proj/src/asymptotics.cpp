#include "tansum/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "tansum/exact_sums.hpp"

namespace tansum {

LambdaRecord lambda_n(int n) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("lambda_n: n must be odd and >= 3");
    LambdaRecord rec;
    rec.n = n;
    const double log_base = std::log(static_cast<double>(n - 1));
    rec.lambda = std::log(1.0 / std::tan(std::numbers::pi / (2.0 * n))) / log_base;
    rec.lower_bound = 1.0 - std::log(std::numbers::pi / 2.0) / log_base;
    rec.upper_bound = rec.lower_bound + 1.0 / ((n - 1) * log_base);
    if (!(rec.lower_bound <= rec.lambda && rec.lambda <= rec.upper_bound)) {
        throw invariant_violation("lambda_n: enclosure failed for n = " + std::to_string(n));
    }
    return rec;
}

bool verify_lambda_monotonic(int n_max) {
    if (n_max < 7) throw std::domain_error("verify_lambda_monotonic: n_max must be >= 7");
    double prev = lambda_n(3).lambda;
    for (int n = 5; n <= n_max; n += 2) {
        const double cur = lambda_n(n).lambda;
        if (!(cur > prev + 1e-12)) return false;
        prev = cur;
    }
    return true;
}

double asymptotic_ratio(int n, int p) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("asymptotic_ratio: n must be odd and >= 3");
    if (p < 1) throw std::domain_error("asymptotic_ratio: p must be >= 1");
    const double log_cot = std::log(1.0 / std::tan(std::numbers::pi / (2.0 * n)));
    return std::exp(log_bigint(sigma(n, p)) - 2.0 * p * log_cot);
}

std::pair<double, double> coquet_constants() {
    const double lambda = std::log(3.0) / std::log(4.0);
    const double upper = (55.0 / 3.0) * std::pow(3.0 / 65.0, lambda);
    const double lower = 2.0 * std::sqrt(3.0) / 3.0;
    return {upper, lower};
}

}  // namespace tansum
