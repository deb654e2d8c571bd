#ifndef MAPCENSUS_DART_ORACLE_HPP
#define MAPCENSUS_DART_ORACLE_HPP

#include "bigmath.hpp"

#include <vector>

namespace mapcensus {
namespace oracle {

// Labeled rotation system on 2n darts. alpha is fixed once and for all as
// the matching dart 2k <-> 2k+1; only sigma (the vertex rotations) varies.
struct DartMap {
    std::vector<int> sigma;

    int dart_count() const { return static_cast<int>(sigma.size()); }
    static int alpha(int dart) { return dart ^ 1; }

    bool transitive() const;
    int vertex_count() const;   // cycles of sigma
    int face_count() const;     // cycles of sigma . alpha
    int genus() const;          // (2 - v + n - f) / 2, asserted even
};

struct OracleBudgetExceeded : std::runtime_error {
    explicit OracleBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Labeled count of transitive genus-g sigmas with the root dart's cycle of
// length root_degree and the remaining cycle lengths exactly `others`,
// divided by the order 2^(n-1)*(n-1)! of the dart-0-fixing relabeling group.
// The division is asserted exact (the group acts freely on rooted maps).
BigCount rooted_with_type(int genus, int root_degree, std::vector<int> others, int max_darts = 12);

// Rooted near-r-regular maps: root degree d, every other vertex degree r.
BigCount rooted_near_regular(int genus, int r, int n_edges, int d, int max_darts = 12);

// Rooted maps with a root dart at a degree-d1 vertex and a second marked
// dart at a different vertex of degree d2, all other vertices degree r.
BigCount rooted_second_dart(int genus, int r, int n_edges, int d1, int d2);

// The D family: second-dart counts summed over all splits d1 + d2 = d_total.
BigCount rooted_double_root(int genus, int r, int n_edges, int d_total);

// Root degree d plus `leaves` extra degree-1 vertices, rest degree r.
BigCount rooted_with_leaves(int genus, int r, int n_edges, int d, int leaves);

// Rooted maps with n edges and no degree restriction (tiny n only).
BigCount rooted_any(int genus, int n_edges);

// Genus-0 analogue of ConstrainedCounter::rooted_anywhere, counted by direct
// enumeration: root at any dart not incident to a leaf end, with the
// phantom-vs-special designation factor for degree-1 vertices.
BigCount constrained_anywhere(int r, const std::vector<int>& specials, int leaves, int e_total);

// Sensed r-regular maps: orbits of valid sigmas under the full centralizer
// of alpha, counted by canonical-form hashing.
BigCount sensed_regular(int genus, int r, int n_edges, int max_darts = 12);

}  // namespace oracle
}  // namespace mapcensus

#endif
