#ifndef MAPCENSUS_GOLDEN_TABLES_HPP
#define MAPCENSUS_GOLDEN_TABLES_HPP

#include "bigmath.hpp"
#include "recurrence_engine.hpp"

#include <vector>

namespace mapcensus {

struct GoldenRow {
    bool sensed = false;
    Surface surface = Surface::Torus;
    int r = 0;
    long long vertices = 0;
    BigCount count;
};

// The 160 published reference values (four tables, r = 3..6, rows 1..10).
const std::vector<GoldenRow>& golden_rows();

}  // namespace mapcensus

#endif
