#ifndef MAPCENSUS_VERIFY_HPP
#define MAPCENSUS_VERIFY_HPP

#include "census_context.hpp"

#include <string>

namespace mapcensus {

struct VerifyResult {
    int comparisons = 0;
    int failures = 0;
    std::string report;

    void merge(const VerifyResult& other);
};

// Recomputed counts against the embedded reference tables (120 rooted rows,
// 40 sensed rows).
VerifyResult verify_tables(CensusContext& ctx);

// Closed formulas against recurrence extractions (r = 3, 4) and the general
// quotient census against the closed sensed formulas.
VerifyResult verify_crosscheck(CensusContext& ctx);

// Exhaustive dart enumeration against tables and census, for every map with
// at most budget_darts darts.
VerifyResult verify_oracle(CensusContext& ctx, int budget_darts);

VerifyResult verify_suite(CensusContext& ctx, const std::string& suite, int budget_darts);

}  // namespace mapcensus

#endif
