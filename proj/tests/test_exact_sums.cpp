#include <doctest.h>

#include <cmath>

#include "tansum/exact_sums.hpp"

using tansum::BigInt;
using tansum::sigma;
using tansum::TrigForm;

TEST_CASE("characteristic polynomial coefficients") {
    CHECK(tansum::char_poly_coeffs(3).e == std::vector<BigInt>{3});
    CHECK(tansum::char_poly_coeffs(5).e == std::vector<BigInt>{10, 5});
    CHECK(tansum::char_poly_coeffs(9).e == std::vector<BigInt>{36, 126, 84, 9});
    CHECK_THROWS_AS(tansum::char_poly_coeffs(4), std::domain_error);
    CHECK_THROWS_AS(tansum::char_poly_coeffs(1), std::domain_error);

    for (int n = 3; n <= 101; n += 2) {
        const auto c = tansum::char_poly_coeffs(n);
        CHECK(c.e.front() == BigInt(n) * (n - 1) / 2);
        CHECK(c.e.back() == n);
        for (const auto& e : c.e) CHECK(e > 0);
    }
}

TEST_CASE("sigma values") {
    CHECK(sigma(1, 5) == 0);
    CHECK(sigma(1, 0) == 0);
    CHECK(sigma(5, 0) == 2);
    CHECK(sigma(5, 2) == 90);
    CHECK(sigma(7, 3) == 7077);
    CHECK(sigma(3, 4) == 81);
    CHECK(sigma(11, 2) == 2365);
    CHECK_THROWS_AS(sigma(4, 2), std::domain_error);
    CHECK_THROWS_AS(sigma(5, -1), std::domain_error);

    // sigma(3, p) = 3^p
    for (int p = 0; p <= 40; ++p) CHECK(sigma(3, p) == tansum::pow_bigint(3, p));
}

TEST_CASE("sigma memoization is pure") {
    tansum::SigmaCache first(9), second(9);
    const BigInt a = first.value(12);
    for (int p = 0; p <= 12; ++p) CHECK(first.value(p) == second.value(p));
    CHECK(first.value(12) == a);
    CHECK(second.value(12) == sigma(9, 12));
}

TEST_CASE("sigma grows strictly in p") {
    for (int n = 5; n <= 15; n += 2) {
        tansum::SigmaCache cache(n);
        for (int p = 1; p <= 12; ++p) CHECK(cache.value(p + 1) > cache.value(p));
    }
}

TEST_CASE("sigma_star") {
    CHECK(tansum::sigma_star(5, 1) == 1);
    CHECK(tansum::sigma_star(5, 2) == 9);
    CHECK(tansum::sigma_star(9, 2) == 29);
    CHECK(tansum::sigma_star(7, 3) == 337);
    // 2*sigma(7,2) = 742 = 17*42 + 28: the n(n-1) division is genuinely inexact here
    CHECK_THROWS_AS(tansum::sigma_star(7, 2), tansum::invariant_violation);
    CHECK_THROWS_AS(tansum::sigma_star(1, 2), std::domain_error);
    CHECK_THROWS_AS(tansum::sigma_star(5, 0), std::domain_error);
}

TEST_CASE("floating evaluation") {
    const double f52 = tansum::sigma_float(5, 2, TrigForm::tangent);
    CHECK(f52 > 89.9999);
    CHECK(f52 < 90.0001);
    CHECK(tansum::sigma_float(3, 1, TrigForm::tangent) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(tansum::sigma_float(9, 3, TrigForm::cotangent) - 33300.0) < 1e-9 * 33300.0);

    for (int n = 3; n <= 11; n += 2) {
        for (int p = 1; p <= 6; ++p) {
            const double t = tansum::sigma_float(n, p, TrigForm::tangent);
            const double c = tansum::sigma_float(n, p, TrigForm::cotangent);
            const double exact = sigma(n, p).convert_to<double>();
            CHECK(std::abs(t - c) <= 1e-12 * std::abs(t));
            CHECK(std::abs(t - exact) <= 1e-9 * exact);
        }
    }
}

TEST_CASE("characteristic roots") {
    CHECK(tansum::verify_char_roots(3));
    CHECK(tansum::verify_char_roots(5));
    CHECK(tansum::verify_char_roots(7));
    for (int n = 9; n <= 51; n += 2) CHECK(tansum::verify_char_roots(n));
    CHECK_THROWS_AS(tansum::verify_char_roots(53), std::domain_error);
    CHECK_THROWS_AS(tansum::verify_char_roots(6), std::domain_error);
}

TEST_CASE("divisibility by n") {
    for (int n = 3; n <= 31; n += 2) {
        tansum::SigmaCache cache(n);
        for (int p = 1; p <= 12; ++p) CHECK(cache.value(p) % n == 0);
    }
}
