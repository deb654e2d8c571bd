#include "dart_oracle.hpp"

#include "census.hpp"
#include "census_context.hpp"
#include "doctest.h"
#include "recurrence_engine.hpp"

using namespace mapcensus;

TEST_CASE("genus of small dart maps") {
    oracle::DartMap path{{0, 1}};  // identity rotation: one edge, two vertices
    CHECK(path.transitive());
    CHECK(path.genus() == 0);

    oracle::DartMap loop{{1, 0}};  // loop on the sphere
    CHECK(loop.genus() == 0);

    oracle::DartMap torus{{2, 3, 1, 0}};  // two interleaved loops: v=1, f=1
    CHECK(torus.transitive());
    CHECK(torus.vertex_count() == 1);
    CHECK(torus.face_count() == 1);
    CHECK(torus.genus() == 1);
}

TEST_CASE("one-edge maps: two rooted maps, both planar") {
    CHECK(oracle::rooted_any(0, 1) == 2);
    CHECK(oracle::rooted_any(1, 1) == 0);
}

TEST_CASE("oracle matches published regular counts") {
    CHECK(oracle::rooted_near_regular(1, 4, 2, 4) == 1);    // torus, 1 vertex
    CHECK(oracle::rooted_near_regular(1, 4, 4, 4) == 15);   // torus, 2 vertices
    CHECK(oracle::rooted_near_regular(0, 3, 3, 3) == 4);    // sphere, 2 vertices
    CHECK(oracle::sensed_regular(1, 4, 4) == 4);
    CHECK(oracle::sensed_regular(1, 4, 2) == 1);
    CHECK(oracle::sensed_regular(1, 3, 3) == 1);
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(oracle::rooted_near_regular(1, 4, 8, 4), oracle::OracleBudgetExceeded);
}

// The divisions inside the oracle assert that the dart-relabeling group acts
// freely; any stabilizer would surface as a NonExactDivision throw here.
TEST_CASE("oracle vs engine: every family on sphere and torus, n <= 5") {
    for (int r : {3, 4}) {
        RecurrenceEngine eng(r);
        eng.require(5);
        for (int n = 1; n <= 5; ++n) {
            for (int d = 1; d <= 2 * n; ++d) {
                CAPTURE(r);
                CAPTURE(n);
                CAPTURE(d);
                CHECK(eng.s().cell(n, d) == oracle::rooted_near_regular(0, r, n, d));
                CHECK(eng.t().cell(n, d) == oracle::rooted_near_regular(1, r, n, d));
                CHECK(eng.d().cell(n, d) == oracle::rooted_double_root(0, r, n, d));
                for (int i = 1; i <= r - 2; ++i) {
                    CHECK(eng.q(i).cell(n, d) == oracle::rooted_second_dart(0, r, n, d, i));
                }
                if (r == 4) {
                    CHECK(eng.qhat2().cell(n, d) == oracle::rooted_with_leaves(0, 4, n, d, 2));
                    CHECK(eng.qhat3().cell(n, d) == oracle::rooted_with_leaves(0, 4, n, d, 3));
                }
            }
        }
    }
}

// Several minutes of enumeration; skipped by default and driven as its own
// ctest entry with --no-skip.
TEST_CASE("oracle vs engine full sweep at n = 6" * doctest::skip()) {
    for (int r : {3, 4}) {
        RecurrenceEngine eng(r);
        eng.require(6);
        const int n = 6;
        for (int d = 1; d <= 2 * n; ++d) {
            CAPTURE(r);
            CAPTURE(d);
            CHECK(eng.s().cell(n, d) == oracle::rooted_near_regular(0, r, n, d));
            CHECK(eng.t().cell(n, d) == oracle::rooted_near_regular(1, r, n, d));
            CHECK(eng.d().cell(n, d) == oracle::rooted_double_root(0, r, n, d));
            for (int i = 1; i <= r - 2; ++i) {
                CHECK(eng.q(i).cell(n, d) == oracle::rooted_second_dart(0, r, n, d, i));
            }
            if (r == 4) {
                CHECK(eng.qhat2().cell(n, d) == oracle::rooted_with_leaves(0, 4, n, d, 2));
                CHECK(eng.qhat3().cell(n, d) == oracle::rooted_with_leaves(0, 4, n, d, 3));
            }
        }
    }
}

TEST_CASE("oracle vs engine spot checks at n = 6") {
    RecurrenceEngine e3(3);
    e3.require(6);
    for (int d : {1, 3, 6}) {
        CAPTURE(d);
        CHECK(e3.s().cell(6, d) == oracle::rooted_near_regular(0, 3, 6, d));
        CHECK(e3.t().cell(6, d) == oracle::rooted_near_regular(1, 3, 6, d));
        CHECK(e3.q(1).cell(6, d) == oracle::rooted_second_dart(0, 3, 6, d, 1));
    }
    CHECK(e3.d().cell(6, 2) == oracle::rooted_double_root(0, 3, 6, 2));

    RecurrenceEngine e4(4);
    e4.require(6);
    for (int d : {2, 4}) {
        CAPTURE(d);
        CHECK(e4.s().cell(6, d) == oracle::rooted_near_regular(0, 4, 6, d));
        CHECK(e4.t().cell(6, d) == oracle::rooted_near_regular(1, 4, 6, d));
        CHECK(e4.qhat3().cell(6, d) == oracle::rooted_with_leaves(0, 4, 6, d, 3));
    }
}

TEST_CASE("oracle vs census: sensed torus counts within budget") {
    CensusContext ctx;
    for (int r = 3; r <= 6; ++r) {
        for (long long v = 1; r * v <= 12; ++v) {
            if ((r * v) % 2 != 0) continue;
            const int n = static_cast<int>(r * v / 2);
            CAPTURE(r);
            CAPTURE(v);
            CHECK(oracle::sensed_regular(1, r, n) ==
                  sensed_general(r, v, ctx.engine(r), ctx.counter(r)));
        }
    }
}

TEST_CASE("genus is invariant under alpha-respecting relabelings") {
    // Conjugating sigma by a centralizer element (swap the two darts of edge
    // 1 and transpose edges 0 and 2) keeps v, f and the genus.
    oracle::DartMap m{{2, 4, 3, 1, 5, 0}};
    REQUIRE(m.transitive());
    auto conj = [&](const std::vector<int>& g) {
        std::vector<int> inv(g.size());
        for (size_t i = 0; i < g.size(); ++i) inv[static_cast<size_t>(g[i])] = static_cast<int>(i);
        oracle::DartMap out;
        out.sigma.resize(g.size());
        for (size_t x = 0; x < g.size(); ++x) {
            out.sigma[x] = g[static_cast<size_t>(
                m.sigma[static_cast<size_t>(inv[x])])];
        }
        return out;
    };
    for (const std::vector<int>& g :
         {std::vector<int>{0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {4, 5, 2, 3, 0, 1}}) {
        oracle::DartMap c = conj(g);
        CHECK(c.transitive() == m.transitive());
        CHECK(c.genus() == m.genus());
    }
}
