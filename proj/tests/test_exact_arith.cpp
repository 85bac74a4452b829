#include <doctest.h>

#include <random>

#include "cpdirac/exact_arith.hpp"
#include "oracles.hpp"

using cpdirac::BigNat;

TEST_CASE("factorial") {
    CHECK(cpdirac::factorial(0) == BigNat(1));
    CHECK(cpdirac::factorial(1) == BigNat(1));
    // frozen from factorial_by_addition(10)
    CHECK(cpdirac::oracle::factorial_by_addition(10) == BigNat(3628800));
    CHECK(cpdirac::factorial(10) == BigNat(3628800));
    CHECK(cpdirac::factorial(30).to_string() == "265252859812191058636308480000000");

    for (int n = 0; n < 60; ++n)
        CHECK(cpdirac::factorial(n + 1) == BigNat(static_cast<std::uint64_t>(n + 1)) * cpdirac::factorial(n));
    for (int n = 0; n <= 25; ++n) CHECK(cpdirac::factorial(n) == cpdirac::oracle::factorial_by_addition(n));

    CHECK_THROWS_AS(cpdirac::factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(cpdirac::binomial(4, 3) == BigNat(4));
    CHECK(cpdirac::binomial(2, 1) == BigNat(2));
    for (int n = 0; n < 10; ++n) CHECK(cpdirac::binomial(n, 0) == BigNat(1));

    SUBCASE("out of range is zero") {
        CHECK(cpdirac::binomial(5, -1).is_zero());
        CHECK(cpdirac::binomial(5, 6).is_zero());
        CHECK(cpdirac::binomial(0, 1).is_zero());
    }

    SUBCASE("matches Pascal triangle, symmetry and recurrence up to 64") {
        const auto rows = cpdirac::oracle::pascal(64);
        for (int n = 0; n <= 64; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(cpdirac::binomial(n, k) == rows[n][k]);
                CHECK(cpdirac::binomial(n, k) == cpdirac::binomial(n, n - k));
                if (n > 0)
                    CHECK(cpdirac::binomial(n, k) == cpdirac::binomial(n - 1, k - 1) + cpdirac::binomial(n - 1, k));
            }
        }
    }
}

TEST_CASE("exact_div") {
    CHECK(cpdirac::exact_div(12, 2) == BigNat(6));
    CHECK(cpdirac::exact_div(24, 4) == BigNat(6));
    CHECK_THROWS_AS(cpdirac::exact_div(7, 2), cpdirac::NonIntegralDivision);
    CHECK_THROWS_AS(cpdirac::exact_div(7, 0), std::invalid_argument);

    SUBCASE("(a*b)/b == a for random big naturals") {
        std::mt19937_64 rng(0xC0FFEE);
        for (int trial = 0; trial < 200; ++trial) {
            BigNat a(1 + rng() % 1000);
            BigNat b(1 + rng() % 1000);
            const int grow = static_cast<int>(rng() % 6);
            for (int i = 0; i < grow; ++i) {
                a *= BigNat(rng() | 1);
                b *= BigNat((rng() >> 7) | 1);
            }
            CHECK(cpdirac::exact_div(a * b, b) == a);
            if (!(b == BigNat(1))) CHECK_THROWS_AS(cpdirac::exact_div(a * b + BigNat(1), b), cpdirac::NonIntegralDivision);
        }
    }
}

TEST_CASE("BigNat parsing and ordering") {
    CHECK(BigNat::from_string("0").is_zero());
    CHECK(BigNat::from_string("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS(BigNat::from_string(""));
    CHECK_THROWS(BigNat::from_string("-3"));
    CHECK(BigNat(3) < BigNat(4));
    CHECK(cpdirac::factorial(25) > BigNat(~std::uint64_t{0}));
}
