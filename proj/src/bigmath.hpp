#ifndef MAPCENSUS_BIGMATH_HPP
#define MAPCENSUS_BIGMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mapcensus {

// Every count in the system. Exact, unbounded; no floating point anywhere
// in a counting path.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational scratch value for formulas whose intermediate terms are
// fractional (double-factorial sums, the sensed-census brackets).
using BigRat = boost::multiprecision::cpp_rational;

struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeCount : std::runtime_error {
    explicit NegativeCount(const std::string& what) : std::runtime_error(what) {}
};

// C(n, k); 0 whenever k < 0, k > n or n < 0.
BigCount binomial(long long n, long long k);

// Multisets of size k from n symbols: C(n+k-1, k). Zero for n <= 0, k > 0.
BigCount multichoose(long long n, long long k);

// n!! with 0!! = (-1)!! = 1. Rejects n < -1.
BigCount double_factorial(long long n);

// Jordan's totient J_2(L) = L^2 * prod_{p | L} (1 - p^-2), exactly.
BigCount jordan_totient2(long long l);

// a / b when b divides a; throws NonExactDivision otherwise. Doubles as the
// integrality assertion for Burnside-style sums.
BigCount exact_div(const BigCount& a, const BigCount& b);

// All divisors of n >= 1, ascending.
std::vector<long long> divisors(long long n);

// True when r has zero fractional part.
bool is_integer(const BigRat& r);

// Integer value of r; throws NonExactDivision when r is fractional.
BigCount rat_to_count(const BigRat& r);

}  // namespace mapcensus

#endif
