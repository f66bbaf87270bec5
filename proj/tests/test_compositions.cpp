#include <doctest.h>

#include "tansum/compositions.hpp"
#include "tansum/exact_sums.hpp"

using tansum::BigInt;
using tansum::compositions_nonneg;
using tansum::compositions_oracle;
using tansum::compositions_positive;

TEST_CASE("positive compositions") {
    CHECK(compositions_positive(5, 2, 3) == 2);
    CHECK(compositions_positive(4, 2, 3) == 3);
    CHECK(compositions_positive(7, 2, 3) == 0);  // above parts*s
    CHECK(compositions_positive(1, 2, 3) == 0);  // below parts
    for (std::int64_t m = 0; m <= 10; ++m)
        for (std::int64_t n = 1; n <= 6; ++n)
            CHECK(compositions_positive(m, n, 1) == (m == n ? 1 : 0));
}

TEST_CASE("nonnegative compositions") {
    CHECK(compositions_nonneg(0, 2, 3) == 1);
    CHECK(compositions_nonneg(3, 2, 3) == 4);
    CHECK(compositions_nonneg(6, 2, 3) == 1);
    // s = 1 collapses to binomial coefficients
    for (std::int64_t p = 1; p <= 10; ++p)
        for (std::int64_t j = 0; j <= p + 2; ++j)
            CHECK(compositions_nonneg(j, p, 1) == tansum::binomial(p, j));
    // s = 0
    CHECK(compositions_nonneg(0, 4, 0) == 1);
    CHECK(compositions_nonneg(1, 4, 0) == 0);
}

TEST_CASE("exhaustive oracle") {
    CHECK(compositions_oracle(5, 2, 3, false) == 2);
    CHECK(compositions_oracle(0, 4, 7, true) == 1);
    CHECK(compositions_oracle(8, 2, 3, true) == 0);
    CHECK_THROWS_AS(compositions_oracle(10, 40, 9, true, /*state_budget=*/1000),
                    tansum::resource_error);
}

TEST_CASE("formulas match the oracle on the full grid") {
    for (std::int64_t m = 0; m <= 20; ++m)
        for (std::int64_t parts = 1; parts <= 6; ++parts)
            for (std::int64_t s = 0; s <= 6; ++s) {
                CAPTURE(m);
                CAPTURE(parts);
                CAPTURE(s);
                CHECK(compositions_nonneg(m, parts, s) == compositions_oracle(m, parts, s, true));
                if (s >= 1)
                    CHECK(compositions_positive(m, parts, s) ==
                          compositions_oracle(m, parts, s, false));
            }
}

TEST_CASE("symmetry and row sums") {
    for (std::int64_t parts = 1; parts <= 6; ++parts)
        for (std::int64_t s = 0; s <= 6; ++s) {
            BigInt row = 0;
            for (std::int64_t m = 0; m <= parts * s; ++m) {
                CHECK(compositions_nonneg(m, parts, s) ==
                      compositions_nonneg(parts * s - m, parts, s));
                row += compositions_nonneg(m, parts, s);
            }
            CHECK(row == tansum::pow_bigint(s + 1, static_cast<unsigned>(parts)));
        }
}

TEST_CASE("digit-balance divisibility criterion") {
    CHECK(tansum::is_multiple_by_digits(0, 5));
    CHECK(tansum::is_multiple_by_digits(7, 7));
    CHECK_FALSE(tansum::is_multiple_by_digits(8, 7));
    for (int n : {3, 5, 7, 9, 11})
        for (std::uint64_t value = 0; value < 20000; ++value)
            REQUIRE(tansum::is_multiple_by_digits(value, n) == (value % static_cast<unsigned>(n) == 0));
}

TEST_CASE("combinatorial sigma") {
    const auto parts = tansum::sigma_combinatorial_parts(5, 2);
    CHECK(parts.square_total == 44);
    CHECK(parts.cross_total == -8);
    CHECK(tansum::sigma_combinatorial(5, 2) == 90);
    CHECK(tansum::sigma_combinatorial(7, 2) == 371);
    for (int p = 1; p <= 12; ++p)
        CHECK(tansum::sigma_combinatorial(3, p) == tansum::pow_bigint(3, static_cast<unsigned>(p)));
    for (int n = 3; n <= 9; n += 2)
        for (int p = 1; p <= 4; ++p) CHECK(tansum::sigma_combinatorial(n, p) == tansum::sigma(n, p));
    CHECK_THROWS_AS(tansum::sigma_combinatorial(6, 2), std::domain_error);
    CHECK_THROWS_AS(tansum::sigma_combinatorial(5, 0), std::domain_error);
}

TEST_CASE("binomial identities") {
    CHECK(tansum::verify_delta_identity(12, 24));
    CHECK(tansum::verify_binomial_convolution(30));
    CHECK(tansum::verify_alternating_central_binomial(50));
}
