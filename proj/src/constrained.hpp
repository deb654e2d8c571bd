#ifndef MAPCENSUS_CONSTRAINED_HPP
#define MAPCENSUS_CONSTRAINED_HPP

#include "bigmath.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mapcensus {

// Counts rooted sphere maps whose non-root vertices are: a prescribed
// multiset of "special" degrees, a number of leaves (degree-1 ends that can
// never carry the root; they stand in for dangling semi-edges), and
// otherwise vertices of degree r.
//
// The table cell(e, d, specials, leaves) is the edge-contraction state: maps
// with e edges and a root vertex of degree d, with the given specials and
// leaves still outstanding among the non-root vertices. Contracting the root
// edge either merges a degree-r vertex (d -> d+r-2), a special (d -> d+s-2,
// one special consumed), or a leaf (d -> d-1), and a root loop splits the
// sphere into two parts over which specials and leaves distribute in every
// possible way.
class ConstrainedCounter {
public:
    explicit ConstrainedCounter(int r);

    int r() const { return r_; }

    // Specials in any order; duplicates allowed. Same-degree specials are
    // indistinguishable.
    const BigCount& cell(long long e, long long d, std::vector<int> specials, int leaves);

    // Maps with e_total edges, the given specials and leaves, and every
    // remaining vertex of degree r, rooted at any semi-edge not incident to
    // a leaf end: root at a degree-r vertex or at any special (including
    // degree-1 specials, which unlike leaves are real vertices).
    BigCount rooted_anywhere(const std::vector<int>& specials, int leaves, long long e_total);

private:
    struct Grid {
        int built = -1;                        // rows 0..built are final
        std::vector<std::vector<BigCount>> rows;  // rows[e] has 2e+1 cells
    };
    using Key = std::pair<std::vector<int>, int>;

    const BigCount& grid_cell(const Grid& g, long long e, long long d) const;
    void ensure(const std::vector<int>& universe, int leaves, int e_max);
    static std::vector<std::vector<int>> submultisets(const std::vector<int>& m);

    int r_;
    std::map<Key, Grid> grids_;
    static const BigCount zero_;
};

// Convenience wrapper for one-off queries (tests, small formulas).
BigCount constrained_sphere_count(int r, const std::vector<int>& specials, int leaves,
                                  long long e_total);

}  // namespace mapcensus

#endif
