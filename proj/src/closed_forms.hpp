#ifndef MAPCENSUS_CLOSED_FORMS_HPP
#define MAPCENSUS_CLOSED_FORMS_HPP

#include "bigmath.hpp"
#include "recurrence_engine.hpp"

namespace mapcensus {
namespace closed {

BigCount factorial(long long n);

// 4-regular rooted sphere maps with n vertices (A000168): 2*3^n*(2n)!/(n!(n+2)!).
BigCount sigma4(long long n);

// 4-regular rooted torus maps with n vertices: 6^(n-1)*(2^n - (2n-1)!!/n!).
BigCount tau4(long long n);

// Helper sum for pi4: f(n) = sum_i C(2i,i)*C(2n-2i,n-i)*(-1)^i/3^i.
BigRat f_aux(long long n);

// 4-regular rooted projective-plane maps with n vertices.
BigCount pi4(long long n);

// 4-regular rooted Klein-bottle maps with n vertices. No explicit coefficient
// formula exists for this family; the value is the Klein recurrence cell
// b(2n, 4).
BigCount kappa4(long long n, RecurrenceEngine& engine4);

// Sphere maps with n degree-4 vertices and two leaves, rooted at a leaf:
// 3^n/(n+1) * C(2n,n).
BigCount rho4(long long n);

// Sphere maps with v degree-4 vertices and four leaves, one of which is the
// root: 6^(v-1)*((2v+1)!!/v! - 2^v).
BigCount omega4(long long v);

// 3-regular rooted sphere maps with 2n vertices (A002005): 2*4^n*(3n)!!/(n!!(n+2)!).
BigCount sigma3(long long n);

// 3-regular rooted torus maps with 2n vertices, n >= 1.
BigCount tau3(long long n);

// 3-regular rooted projective-plane maps with 2n vertices, n >= 1.
BigCount pi3(long long n);

// The positive coefficient -[t^n]theta = 2^(2n)*(3n)!!/((n+1)!*n!!).
BigCount theta_coeff(long long n);

// 3-regular rooted Klein-bottle maps with 2n vertices, n >= 1.
//
// The printed formula reads (n+1)*(2*theta_n - pi_n) + correction sum, with
// theta_n left undefined at that point. Reading theta_n as the series
// coefficient itself, [t^n]theta = -theta_coeff(n), reproduces the published
// series 6, 174, 4236, ...; reading it as the positive coefficient does not.
// kappa3() uses the signed reading; the raw evaluator is exposed so tests can
// document the reconciliation.
BigCount kappa3(long long n);
BigRat kappa3_with_theta_reading(long long n, bool signed_theta);

}  // namespace closed
}  // namespace mapcensus

#endif
