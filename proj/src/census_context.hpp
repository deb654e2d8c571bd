#ifndef MAPCENSUS_CENSUS_CONTEXT_HPP
#define MAPCENSUS_CENSUS_CONTEXT_HPP

#include "census.hpp"
#include "constrained.hpp"
#include "recurrence_engine.hpp"

#include <map>

namespace mapcensus {

// Owns one recurrence engine and one constrained counter per regular degree,
// built lazily and reused across queries.
class CensusContext {
public:
    RecurrenceEngine& engine(int r);
    ConstrainedCounter& counter(int r);

    BigCount rooted(Surface surface, int r, long long vertices);

    // Closed formulas for r = 3 and 4, quotient machinery otherwise.
    BigCount sensed(int r, long long vertices);

    // Cache restore: replaces any existing engine for this degree.
    RecurrenceEngine& install_engine(int r, RecurrenceEngine&& engine);

    const std::map<int, RecurrenceEngine>& engines() const { return engines_; }

private:
    std::map<int, RecurrenceEngine> engines_;
    std::map<int, ConstrainedCounter> counters_;
};

}  // namespace mapcensus

#endif
