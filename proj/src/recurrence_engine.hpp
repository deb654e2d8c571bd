#ifndef MAPCENSUS_RECURRENCE_ENGINE_HPP
#define MAPCENSUS_RECURRENCE_ENGINE_HPP

#include "bigmath.hpp"

#include <string>
#include <vector>

namespace mapcensus {

enum class Surface { Sphere, Torus, Projective, Klein };

const char* surface_name(Surface s);

// Counting family of a degree table. S/D/Q live on the sphere, T/P/B on the
// torus, projective plane and Klein bottle; Qhat2/Qhat3 are the r=4 sphere
// families with two and three extra leaves.
enum class Family { S, D, Q, T, P, B, Qhat2, Qhat3 };

struct FamilyId {
    Family family = Family::S;
    int r = 0;
    int second_degree = 0;  // the i of Q(i); 0 otherwise

    // Text tag used by the cache format and reports, e.g. "s.r4", "q2.r5".
    std::string tag() const;
};

// Memoized (edges, root degree) -> count table for one family. Rows are
// filled bottom-up by the engine; a cell outside the stored triangle is 0.
class DegreeTable {
public:
    DegreeTable() = default;
    explicit DegreeTable(FamilyId id) : id_(id) {}

    const FamilyId& id() const { return id_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    const BigCount& cell(long long n, long long d) const;

    // Engine/cache use only; a row for n has 2n+1 cells.
    std::vector<BigCount>& mutable_row(int n);
    void resize_rows(int n_max);

private:
    FamilyId id_;
    std::vector<std::vector<BigCount>> rows_;
    static const BigCount zero_;
};

// Builds the dynamic-programming tables for every rooted counting family of
// one regular degree r, and extracts regular-map counts from them.
//
// Recurrences are applied for n >= 1, d >= 1 with bases s(0,0) = 1 and every
// other family 0 at n = 0.  (The source text states t(0,0) = 1, but that base
// propagates spurious counts — it would force t(2,4) = 7 against the known
// torus value 1 — so the vertex-map base is kept sphere-only.)
class RecurrenceEngine {
public:
    explicit RecurrenceEngine(int r);

    int r() const { return r_; }

    // Extends every table of this engine so cells with n <= n_max are built.
    void require(int n_max);

    const DegreeTable& s() const { return s_; }
    const DegreeTable& d() const { return d_; }
    const DegreeTable& q(int i) const;  // 1 <= i <= r-2
    const DegreeTable& t() const { return t_; }
    const DegreeTable& p() const { return p_; }
    const DegreeTable& b() const { return b_; }
    const DegreeTable& qhat2() const;  // r == 4 only
    const DegreeTable& qhat3() const;

    // Rooted r-regular maps with the given number of vertices: cell
    // (r*v/2, r) of the surface's table. 0 when r*v is odd.
    BigCount rooted_regular(Surface surface, long long vertices);

    std::vector<DegreeTable*> all_tables();

    int built() const { return built_; }

    // Cache restore: marks rows 0..n_built of every table as final. The
    // caller has already sized and filled them.
    void adopt_rows(int n_built);

private:
    void build_rows(int n_from, int n_to);

    int r_;
    int built_ = -1;
    DegreeTable s_, d_, t_, p_, b_, qhat2_, qhat3_;
    std::vector<DegreeTable> q_;  // q_[i-1] holds Q(i)
};

}  // namespace mapcensus

#endif
