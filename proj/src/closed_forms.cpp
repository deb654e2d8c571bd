#include "closed_forms.hpp"

namespace mapcensus {
namespace closed {

BigCount factorial(long long n) {
    BigCount result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

namespace {

BigCount pow_int(long long base, long long exp) {
    BigCount result = 1;
    for (long long i = 0; i < exp; ++i) result *= base;
    return result;
}

BigCount nonneg(BigCount v, const char* what) {
    if (v < 0) throw NegativeCount(std::string(what) + ": negative value");
    return v;
}

}  // namespace

BigCount sigma4(long long n) {
    if (n < 0) return 0;
    BigRat r(2 * pow_int(3, n) * factorial(2 * n), factorial(n) * factorial(n + 2));
    return rat_to_count(r);
}

BigCount tau4(long long n) {
    if (n < 1) return 0;
    BigRat bracket = BigRat(pow_int(2, n)) - BigRat(double_factorial(2 * n - 1), factorial(n));
    return nonneg(rat_to_count(BigRat(pow_int(6, n - 1)) * bracket), "tau4");
}

BigRat f_aux(long long n) {
    BigRat sum = 0;
    for (long long i = 0; i <= n; ++i) {
        BigRat term(binomial(2 * i, i) * binomial(2 * (n - i), n - i), pow_int(3, i));
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

BigCount pi4(long long n) {
    if (n < 1) return 0;
    BigRat total(pow_int(3, n) * factorial(2 * n), factorial(n + 1) * factorial(n));
    BigRat sum = 0;
    for (long long k = 0; k <= n - 1; ++k) {
        BigRat weight = BigRat(binomial(2 * n + 1, k)) * BigRat(pow_int(2, 2 * k), pow_int(2, 2 * n));
        BigRat inner = BigRat(1, 4) * f_aux(n + 1 - k) + BigRat(4, 3) * f_aux(n - 1 - k);
        sum += weight * inner;
    }
    total += BigRat(pow_int(3, n + 1), 2 * n + 1) * sum;
    return nonneg(rat_to_count(total), "pi4");
}

BigCount kappa4(long long n, RecurrenceEngine& engine4) {
    if (n < 1) return 0;
    return engine4.rooted_regular(Surface::Klein, n);
}

BigCount rho4(long long n) {
    if (n < 0) return 0;
    return rat_to_count(BigRat(pow_int(3, n) * binomial(2 * n, n), n + 1));
}

BigCount omega4(long long v) {
    if (v < 1) return 0;
    BigRat bracket = BigRat(double_factorial(2 * v + 1), factorial(v)) - BigRat(pow_int(2, v));
    return nonneg(rat_to_count(BigRat(pow_int(6, v - 1)) * bracket), "omega4");
}

BigCount sigma3(long long n) {
    if (n < 0) return 0;
    BigRat r(2 * pow_int(4, n) * double_factorial(3 * n),
             double_factorial(n) * factorial(n + 2));
    return rat_to_count(r);
}

// The torus series for r = 3 begins one regular-map size above the printed
// index: evaluating the published sum at m gives the count for 2m+2 vertices,
// so tau3(n) (2n vertices) evaluates it at n-1.
BigCount tau3(long long n) {
    if (n < 1) return 0;
    const long long m = n - 1;
    BigRat sum = 0;
    for (long long k = 0; k <= m; ++k) {
        sum += BigRat(pow_int(3, k) * double_factorial(3 * m - 2 * k + 1), factorial(m - k));
    }
    BigRat total = BigRat(pow_int(2, 2 * m) * double_factorial(m), factorial(m + 1)) * sum;
    return nonneg(rat_to_count(total), "tau3");
}

BigCount pi3(long long n) {
    if (n < 1) return 0;
    BigRat total = -BigRat(pow_int(2, 2 * n + 1) * double_factorial(3 * n),
                           factorial(n + 1) * double_factorial(n));
    BigRat sum = 0;
    for (long long k = 0; k <= n; ++k) {
        sum += BigRat(pow_int(3, k) * double_factorial(2 * k - 1) *
                          double_factorial(3 * n - 2 * k - 1),
                      pow_int(2, k) * factorial(k) * factorial(n - k));
    }
    total += BigRat(3 * pow_int(2, 2 * n), double_factorial(n + 1)) * sum;
    return nonneg(rat_to_count(total), "pi3");
}

BigCount theta_coeff(long long n) {
    if (n < 0) return 0;
    return rat_to_count(BigRat(pow_int(2, 2 * n) * double_factorial(3 * n),
                               factorial(n + 1) * double_factorial(n)));
}

BigRat kappa3_with_theta_reading(long long n, bool signed_theta) {
    BigRat theta(theta_coeff(n));
    if (signed_theta) theta = -theta;
    BigRat total = BigRat(n + 1) * (2 * theta - BigRat(pi3(n)));
    BigRat sum = 0;
    for (long long k = 0; k <= n; ++k) {
        sum += BigRat(pow_int(3, k) * double_factorial(3 * n - 2 * k - 2), factorial(n - k));
    }
    total += BigRat(3 * pow_int(2, 2 * n), double_factorial(n - 2)) * sum;
    return total;
}

BigCount kappa3(long long n) {
    if (n < 1) return 0;
    return nonneg(rat_to_count(kappa3_with_theta_reading(n, true)), "kappa3");
}

}  // namespace closed
}  // namespace mapcensus
