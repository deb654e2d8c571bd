#include "bigmath.hpp"

#include "doctest.h"

#include <numeric>

using namespace mapcensus;

TEST_CASE("binomial basics and out-of-range zeros") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("binomial symmetry") {
    for (long long n = 0; n <= 40; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
}

TEST_CASE("multichoose") {
    CHECK(multichoose(3, 2) == 6);
    CHECK(multichoose(1, 5) == 1);
    CHECK(multichoose(0, 1) == 0);
    CHECK(multichoose(0, 0) == 1);
    CHECK(multichoose(-2, 3) == 0);
    for (long long n = 1; n <= 20; ++n) {
        for (long long k = 0; k <= 20; ++k) {
            CHECK(multichoose(n, k) == binomial(n + k - 1, k));
        }
    }
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(9) == 945);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("jordan totient J2") {
    CHECK(jordan_totient2(1) == 1);
    CHECK(jordan_totient2(2) == 3);
    CHECK(jordan_totient2(6) == 24);
    CHECK(jordan_totient2(12) == 96);  // J2(4)*J2(3) = 12*8
    CHECK_THROWS_AS(jordan_totient2(0), std::invalid_argument);

    // Multiplicativity on coprime pairs.
    for (long long a = 1; a <= 50; ++a) {
        for (long long b = 1; b <= 50; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(jordan_totient2(a * b) == jordan_totient2(a) * jordan_totient2(b));
        }
    }

    // sum_{d | n} J2(d) = n^2.
    for (long long n = 1; n <= 100; ++n) {
        BigCount sum = 0;
        for (long long d : divisors(n)) sum += jordan_totient2(d);
        CHECK(sum == BigCount(n) * n);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(6, 3) == 2);
    CHECK(exact_div(0, 7) == 0);
    CHECK_THROWS_AS(exact_div(5, 2), NonExactDivision);
    CHECK_THROWS_AS(exact_div(5, 0), std::invalid_argument);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<long long>{1});
    CHECK(divisors(6) == std::vector<long long>{1, 2, 3, 6});
    CHECK(divisors(9) == std::vector<long long>{1, 3, 9});
    CHECK(divisors(100) == std::vector<long long>{1, 2, 4, 5, 10, 20, 25, 50, 100});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("rational helpers") {
    CHECK(is_integer(BigRat(10, 5)));
    CHECK(!is_integer(BigRat(10, 4)));
    CHECK(rat_to_count(BigRat(10, 5)) == 2);
    CHECK_THROWS_AS(rat_to_count(BigRat(1, 3)), NonExactDivision);
}
