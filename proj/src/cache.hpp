#ifndef MAPCENSUS_CACHE_HPP
#define MAPCENSUS_CACHE_HPP

#include "census_context.hpp"

#include <stdexcept>
#include <string>

namespace mapcensus {

struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// Writes every built table of the context to one line-oriented text file:
// a header with format version and engine parameters, nonzero cells as
// "family<TAB>n<TAB>d<TAB>value" records, and a trailing checksum line.
void cache_store(const CensusContext& ctx, const std::string& path);

// Loads tables back. Refuses on version mismatch, checksum failure or
// malformed records, and re-checks three random small cells against
// recomputation before accepting.
void cache_load(CensusContext& ctx, const std::string& path);

}  // namespace mapcensus

#endif
