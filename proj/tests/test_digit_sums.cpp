#include <doctest.h>

#include <array>
#include <random>

#include "tansum/digit_sums.hpp"
#include "tansum/exact_sums.hpp"

using tansum::BigInt;

namespace {

// frozen brute-force derivations (independent scratch enumeration)
constexpr std::array<int, 24> kPeriod24 = {0, -1, -1, 1, 1, -1, -1, 0, 0, 0, 1, -1,
                                           1, -2, -2, 2, 0,  0,  0, -1, 1, -1, 0, 0};
constexpr std::array<int, 24> kS3Below24 = {0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4,
                                            4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 6, 6};

}  // namespace

TEST_CASE("digit sums") {
    CHECK(tansum::digit_sum(0, 2) == 0);
    CHECK(tansum::digit_sum(3, 2) == 2);
    CHECK(tansum::digit_sum(15, 4) == 6);
    CHECK_THROWS_AS(tansum::digit_sum(5, 1), std::domain_error);

    // digit-append law: s_b(a*b + d) == s_b(a) + d for 0 <= d < b
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const unsigned b = 2 + rng() % 14;
        const std::uint64_t a = rng() % 1000000;
        const unsigned d = rng() % b;
        CHECK(tansum::digit_sum(a * b + d, b) == tansum::digit_sum(a, b) + d);
    }
}

TEST_CASE("newman_sum by enumeration") {
    CHECK(tansum::newman_sum(3, 1).s_value == 1);
    CHECK(tansum::newman_sum(3, 0).s_value == 0);
    CHECK(tansum::newman_sum(3, 16).s_value == 6);    // = 2*sigma(3,2)/3
    CHECK(tansum::newman_sum(3, 256).s_value == 54);  // = 2*sigma(3,4)/3
    CHECK(tansum::newman_sum(5, 256).s_value == 36);  // = 2*sigma(5,2)/5

    const auto stat = tansum::newman_sum(7, 10000);
    CHECK(stat.s_value == BigInt(stat.even_count) - BigInt(stat.odd_count));
    CHECK(stat.even_count + stat.odd_count == (10000 + 6) / 7);

    CHECK_THROWS_AS(tansum::newman_sum(3, 1000, /*budget=*/100), tansum::resource_error);
    CHECK_THROWS_AS(tansum::newman_sum(4, 10), std::domain_error);
}

TEST_CASE("newman_sum_fast equals 2 sigma / n") {
    CHECK(tansum::newman_sum_fast(5, 2) == 36);
    CHECK(tansum::newman_sum_fast(3, 1) == 2);
    CHECK(tansum::newman_sum_fast(7, 2) == 106);
    CHECK(tansum::newman_sum_fast(3, 1) == tansum::newman_sum(3, 4).s_value);  // x = 2^(2*1)
    CHECK_THROWS_AS(tansum::newman_sum_fast(3, 0), std::domain_error);

    for (int n = 3; n <= 9; n += 2) {
        for (int p = 1; p <= 3; ++p) {
            const BigInt x = tansum::pow_bigint(n - 1, 2 * static_cast<unsigned>(p));
            if (x > 1000000) continue;
            CHECK(tansum::newman_sum(n, x.convert_to<std::uint64_t>()).s_value ==
                  tansum::newman_sum_fast(n, p));
        }
    }
}

TEST_CASE("digit-sum identity by enumeration") {
    CHECK(tansum::verify_digit_sum_identity(3, 3));
    CHECK(tansum::verify_digit_sum_identity(5, 2));
    CHECK(tansum::verify_digit_sum_identity(9, 1));
    CHECK_THROWS_AS(tansum::verify_digit_sum_identity(3, 20, /*budget=*/1000), tansum::resource_error);
}

TEST_CASE("period-24 recursion") {
    const auto table = tansum::derive_period24_table(96);
    for (int i = 0; i < 24; ++i) {
        CHECK(table.t[i] >= -2);
        CHECK(table.t[i] <= 2);
        CHECK(table.t[i] == kPeriod24[i]);
    }
    // deriving over a longer range must give the identical table
    const auto longer = tansum::derive_period24_table(20000);
    CHECK(longer.t == table.t);
    CHECK_THROWS_AS(tansum::derive_period24_table(95), std::domain_error);

    CHECK(tansum::s3_fast(0, table) == 0);
    CHECK(tansum::s3_fast(1, table) == 1);
    for (std::uint64_t x = 0; x < 24; ++x) CHECK(tansum::s3_fast(x, table) == kS3Below24[x]);

    // recursion reproduces enumeration
    CHECK(tansum::s3_fast(10000, table) == tansum::newman_sum(3, 10000).s_value);
    BigInt run = 0;
    for (std::uint64_t x = 1; x <= 20000; ++x) {
        const std::uint64_t r = x - 1;
        if (r % 3 == 0) run += (tansum::digit_sum(r, 2) & 1u) ? -1 : 1;
        REQUIRE(tansum::s3_fast(x, table) == run);
    }
}

TEST_CASE("newman bound scan") {
    const auto rep = tansum::check_newman_bounds(30000);
    CHECK(rep.newman_checks == 30000);
    CHECK(rep.coquet_checks == 10000);

    // S3 > 0 and the 1/20..5 envelope hold everywhere; the sharp coquet bounds
    // hold everywhere except the known edge y = 1 where S3(3) = 1 < 2 sqrt(3)/3.
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].check == "coquet-bounds");
    CHECK(rep.violations[0].at == 1);
    CHECK(rep.violations[0].ratio == doctest::Approx(1.0));

    const double lo = 2.0 / std::sqrt(3.0);
    const double hi = (55.0 / 3.0) * std::pow(3.0 / 65.0, std::log(3.0) / std::log(4.0));
    CHECK(rep.coquet_max_ratio < hi + 1e-9);
    CHECK(rep.newman_min_ratio > 0.05);
    CHECK(rep.newman_max_ratio < 5.0);

    // the lower constant is attained at y = 2 * 4^k
    const auto table = tansum::derive_period24_table(1000);
    for (std::uint64_t y : {2ull, 8ull, 32ull, 128ull, 512ull, 2048ull}) {
        const double ratio = tansum::s3_fast(3 * y, table).convert_to<double>() /
                             std::pow(static_cast<double>(y), std::log(3.0) / std::log(4.0));
        CHECK(ratio == doctest::Approx(lo).epsilon(1e-12));
    }
}
