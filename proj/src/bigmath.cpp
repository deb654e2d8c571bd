#include "bigmath.hpp"

#include <algorithm>

namespace mapcensus {

BigCount binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigCount multichoose(long long n, long long k) {
    if (k == 0) return 1;
    if (n <= 0) return 0;
    return binomial(n + k - 1, k);
}

BigCount double_factorial(long long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
    BigCount result = 1;
    for (long long i = n; i >= 2; i -= 2) result *= i;
    return result;
}

BigCount jordan_totient2(long long l) {
    if (l <= 0) throw std::invalid_argument("jordan_totient2: L must be positive");
    BigCount num = BigCount(l) * l;
    long long rest = l;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        num = num / (p * p) * (p * p - 1);  // p^2 | L^2, division exact
    }
    if (rest > 1) num = num / (rest * rest) * (rest * rest - 1);
    return num;
}

BigCount exact_div(const BigCount& a, const BigCount& b) {
    if (b <= 0) throw std::invalid_argument("exact_div: divisor must be positive");
    BigCount q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw NonExactDivision("non-exact division: " + a.str() + " / " + b.str());
    }
    return q;
}

std::vector<long long> divisors(long long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_integer(const BigRat& r) { return denominator(r) == 1; }

BigCount rat_to_count(const BigRat& r) {
    if (!is_integer(r)) {
        throw NonExactDivision("expected integral value, got " + r.str());
    }
    return numerator(r);
}

}  // namespace mapcensus
