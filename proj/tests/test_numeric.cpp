#include <doctest.h>

#include <cmath>
#include <random>

#include "tansum/numeric.hpp"

using tansum::BigInt;

TEST_CASE("binomial coefficients") {
    CHECK(tansum::binomial(0, 0) == 1);
    CHECK(tansum::binomial(5, 2) == 10);
    CHECK(tansum::binomial(9, 4) == 126);
    CHECK(tansum::binomial(101, 50) == BigInt("199804427433372226016001220056"));
    CHECK(tansum::binomial(5, 7) == 0);
    CHECK(tansum::binomial(5, -1) == 0);
    CHECK_THROWS_AS(tansum::binomial(-2, 1), std::domain_error);

    // Pascal rule on a random patch
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t n = 1 + rng() % 60;
        const std::int64_t k = rng() % (n + 1);
        CHECK(tansum::binomial(n, k) == tansum::binomial(n - 1, k - 1) + tansum::binomial(n - 1, k));
    }
}

TEST_CASE("exact division") {
    CHECK(tansum::exact_div(90, 6, "t") == 15);
    CHECK(tansum::exact_div(-90, 6, "t") == -15);
    CHECK_THROWS_AS(tansum::exact_div(91, 6, "t"), tansum::invariant_violation);
    CHECK_THROWS_AS(tansum::exact_div(1, 0, "t"), tansum::invariant_violation);
}

TEST_CASE("log of big integers") {
    CHECK(tansum::log_bigint(1) == 0.0);
    CHECK(std::abs(tansum::log_bigint(BigInt(1) << 400) - 400 * std::log(2.0)) < 1e-10);
    const BigInt big = tansum::pow_bigint(10, 150);
    CHECK(std::abs(tansum::log_bigint(big) - 150 * std::log(10.0)) < 1e-9);
    const BigInt huge = tansum::pow_bigint(3, 5000);
    CHECK(std::abs(tansum::log_bigint(huge) / (5000 * std::log(3.0)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(tansum::log_bigint(0), std::domain_error);
    CHECK_THROWS_AS(tansum::log_bigint(-5), std::domain_error);
}
