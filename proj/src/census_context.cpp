#include "census_context.hpp"

namespace mapcensus {

RecurrenceEngine& CensusContext::engine(int r) {
    auto it = engines_.find(r);
    if (it == engines_.end()) it = engines_.emplace(r, RecurrenceEngine(r)).first;
    return it->second;
}

ConstrainedCounter& CensusContext::counter(int r) {
    auto it = counters_.find(r);
    if (it == counters_.end()) it = counters_.emplace(r, ConstrainedCounter(r)).first;
    return it->second;
}

RecurrenceEngine& CensusContext::install_engine(int r, RecurrenceEngine&& engine) {
    return engines_.insert_or_assign(r, std::move(engine)).first->second;
}

BigCount CensusContext::rooted(Surface surface, int r, long long vertices) {
    if (r < 3) throw std::invalid_argument("rooted: r must be >= 3");
    return engine(r).rooted_regular(surface, vertices);
}

BigCount CensusContext::sensed(int r, long long vertices) {
    if (r < 3) throw std::invalid_argument("sensed: r must be >= 3");
    if ((static_cast<long long>(r) * vertices) % 2 != 0) {
        throw std::invalid_argument("sensed: r*v must be even");
    }
    if (r == 3) return sensed_tau3(vertices, counter(3));
    if (r == 4) return sensed_tau4(vertices);
    return sensed_general(r, vertices, engine(r), counter(r));
}

}  // namespace mapcensus
