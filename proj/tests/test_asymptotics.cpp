#include <doctest.h>

#include <cmath>

#include "tansum/asymptotics.hpp"
#include "tansum/exact_sums.hpp"

TEST_CASE("lambda values and bounds") {
    CHECK(std::abs(tansum::lambda_n(3).lambda - 0.79248125) < 1e-8);
    CHECK(std::abs(tansum::lambda_n(5).lambda - 0.81092244) < 1e-8);
    CHECK(std::abs(tansum::lambda_n(7).lambda - 0.82452046) < 1e-8);
    CHECK(std::abs(tansum::lambda_n(9).lambda - 0.83455828) < 1e-8);
    CHECK(std::abs(tansum::lambda_n(11).lambda - 0.84230667) < 1e-8);
    CHECK(tansum::lambda_n(3).lambda == doctest::Approx(std::log(3.0) / std::log(4.0)).epsilon(1e-14));

    for (int n = 3; n <= 101; n += 2) {
        const auto rec = tansum::lambda_n(n);  // containment asserted inside
        CHECK(rec.lambda > 0.0);
        CHECK(rec.lambda < 1.0);
        CHECK(rec.lower_bound <= rec.lambda);
        CHECK(rec.lambda <= rec.upper_bound);
    }
    CHECK_THROWS_AS(tansum::lambda_n(4), std::domain_error);
}

TEST_CASE("lambda monotonicity") {
    CHECK(tansum::verify_lambda_monotonic(11));
    CHECK(tansum::verify_lambda_monotonic(101));
    double prev = tansum::lambda_n(3).lambda;
    for (int n = 5; n <= 101; n += 2) {
        const double cur = tansum::lambda_n(n).lambda;
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("asymptotic ratio") {
    // n = 3: sigma(3,p) = 3^p = cot^(2p)(pi/6), ratio exactly 1 in exact arithmetic
    for (int p = 1; p <= 40; ++p) {
        CHECK(tansum::sigma(3, p) == tansum::pow_bigint(3, static_cast<unsigned>(p)));
        CHECK(std::abs(tansum::asymptotic_ratio(3, p) - 1.0) < 1e-9);
    }
    CHECK(std::abs(tansum::asymptotic_ratio(5, 30) - 1.0) < 1e-6);
    const double off10 = std::abs(tansum::asymptotic_ratio(7, 10) - 1.0);
    const double off5 = std::abs(tansum::asymptotic_ratio(7, 5) - 1.0);
    CHECK(off10 < off5);
    for (int n : {5, 7, 9, 11}) CHECK(std::abs(tansum::asymptotic_ratio(n, 50) - 1.0) < 1e-4);
}

TEST_CASE("coquet constants") {
    const auto [upper, lower] = tansum::coquet_constants();
    CHECK(std::abs(upper - 1.601958421) < 1e-9);
    CHECK(std::abs(lower - 1.154700538) < 1e-9);
    CHECK(lower == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
}
