#ifndef MAPCENSUS_ORBIFOLD_HPP
#define MAPCENSUS_ORBIFOLD_HPP

#include "bigmath.hpp"
#include "constrained.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapcensus {

// Cyclic orbifold of the torus: always a sphere, identified by its branch
// indices, the period L of the homeomorphism, and the number of
// homeomorphism classes sharing the signature.
struct OrbifoldSignature {
    std::vector<int> branch_indices;  // ascending
    int period = 0;
    int multiplicity = 0;

    std::string name() const;  // e.g. "[2,4,4]"
};

// The four toroidal signatures: [2^4] (L=2, x1), [2,4^2] (L=4, x2),
// [3^3] (L=3, x2), [2,3,6] (L=6, x2).
const std::vector<OrbifoldSignature>& toroidal_orbifolds();

// Where one group of equal branch indices sits on the quotient map. A vertex
// placement of index m forces the vertex degree to r/m; only index-2 points
// may sit at dangling semi-edge ends.
struct IndexPlacement {
    int index = 0;
    int at_face = 0;
    int at_vertex = 0;
    int at_dangling = 0;
};

struct BranchPlacement {
    std::vector<IndexPlacement> groups;  // one per distinct index, ascending

    int dangling() const;
    std::vector<int> special_degrees(int r) const;   // descending-free, sorted
    std::vector<int> face_indices() const;           // multiset of face-placed indices
};

// All placements satisfying divisibility (vertex: m | r), the index-2 rule
// for dangling ends, and handshake parity. Same-index branch points are
// unordered.
std::vector<BranchPlacement> enumerate_placements(const OrbifoldSignature& sig, int r);

// Derived quotient-map parameters for one placement at torus vertex count v.
// v_prime counts dangling ends as (leaf) vertices so that Euler reads
// v' - n' + f' = 2 with n' = e_full + e_dang.
struct QuotientShape {
    long long regular_vertices = 0;  // degree-r vertices
    std::vector<int> special_degrees;
    long long e_full = 0;
    long long e_dang = 0;
    std::vector<int> face_branch_multiset;
    long long v_prime = 0;
    long long n_prime = 0;
    long long f_prime = 0;
    long long root_positions = 0;  // 2*e_full + e_dang
};

// Empty when v fails the lift divisibility or handshake constraints.
std::optional<QuotientShape> shape_of(const BranchPlacement& placement,
                                      const OrbifoldSignature& sig, int r, long long v);

// Ways to put the face-placed branch points into f' faces, at most one per
// face, equal indices indistinguishable.
BigCount face_placement_ways(const QuotientShape& shape);

// Rooted quotient maps on the signature's orbifold lifting to r-regular torus
// maps with v vertices: sum over placements of face choices times the
// constrained sphere count, roots ranging over the 2*e_full + e_dang real
// semi-edges.
BigCount count_quotient_maps(const OrbifoldSignature& sig, int r, long long v,
                             ConstrainedCounter& counter);

}  // namespace mapcensus

#endif
