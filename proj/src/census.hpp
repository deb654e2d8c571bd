#ifndef MAPCENSUS_CENSUS_HPP
#define MAPCENSUS_CENSUS_HPP

#include "bigmath.hpp"
#include "constrained.hpp"
#include "orbifold.hpp"
#include "recurrence_engine.hpp"

#include <string>
#include <vector>

namespace mapcensus {

// Sphere maps with v vertices in total, i of them leaves and the rest of
// degree 3, rooted at a leaf. Descending recurrence
// q(i)(v) = (3v-2i-4)/(i-1) * q(i-1)(v-2) from the base q(2)(2) = 1; the
// i = 1 column has no recurrence and is counted directly (rooted-anywhere
// count divided over the 2E-1 valid root positions).
BigCount q_leaf3(int i, long long v, ConstrainedCounter& counter3);

// Sensed 4-regular torus maps with v vertices, by the closed bracket formula
// (sigma/rho/omega terms per orbifold plus the J_2 divisor sum, divided by 4v).
BigCount sensed_tau4(long long v);

// Sensed 3-regular torus maps with v vertices (v even), by the closed
// formula with q_leaf3 inputs; division by 3v exact.
BigCount sensed_tau3(long long v, ConstrainedCounter& counter3);

struct CensusTerm {
    std::string source;  // signature name or "divisor-sum"
    BigCount contribution;
};

struct SensedBreakdown {
    std::vector<CensusTerm> terms;
    BigCount bracket;  // sum of all contributions, divisible by r*v
};

SensedBreakdown sensed_breakdown(int r, long long v, RecurrenceEngine& engine,
                                 ConstrainedCounter& counter);

// Sensed r-regular torus maps with v vertices via quotient-map counting:
// (1/(r*v)) * [sum over signatures of multiplicity * quotient count
//              + sum_{L|v} J_2(L) * rooted torus count at v/L vertices].
BigCount sensed_general(int r, long long v, RecurrenceEngine& engine,
                        ConstrainedCounter& counter);

}  // namespace mapcensus

#endif
