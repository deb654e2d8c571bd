#include "constrained.hpp"

#include <algorithm>
#include <iterator>

namespace mapcensus {

const BigCount ConstrainedCounter::zero_ = 0;

ConstrainedCounter::ConstrainedCounter(int r) : r_(r) {
    if (r < 3) throw std::invalid_argument("ConstrainedCounter: r must be >= 3");
}

const BigCount& ConstrainedCounter::grid_cell(const Grid& g, long long e, long long d) const {
    if (e < 0 || d < 0 || d > 2 * e || e > g.built) return zero_;
    return g.rows[static_cast<size_t>(e)][static_cast<size_t>(d)];
}

std::vector<std::vector<int>> ConstrainedCounter::submultisets(const std::vector<int>& m) {
    // m sorted; enumerate by per-distinct-value counts.
    std::vector<std::pair<int, int>> groups;
    for (int v : m) {
        if (!groups.empty() && groups.back().first == v) {
            ++groups.back().second;
        } else {
            groups.emplace_back(v, 1);
        }
    }
    std::vector<std::vector<int>> out{{}};
    for (auto [value, count] : groups) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out) {
            for (int take = 0; take <= count; ++take) {
                std::vector<int> s = prefix;
                s.insert(s.end(), static_cast<size_t>(take), value);
                next.push_back(std::move(s));
            }
        }
        out = std::move(next);
    }
    return out;
}

void ConstrainedCounter::ensure(const std::vector<int>& universe, int leaves, int e_max) {
    // Downward-closed set of states: every sub-multiset of the universe with
    // every leaf count up to `leaves`.
    struct State {
        Key key;
        Grid* grid;
        std::vector<int> distinct;              // distinct special degrees of key.first
        std::vector<const Grid*> after_special; // grid of key.first minus that degree
        const Grid* after_leaf = nullptr;       // (key.first, leaves-1)
        std::vector<std::pair<const Grid*, const Grid*>> split_pairs;  // loop-term factors
    };

    std::vector<State> states;
    for (auto& sub : submultisets(universe)) {
        for (int l = 0; l <= leaves; ++l) {
            Key key{sub, l};
            Grid& g = grids_[key];
            if (static_cast<int>(g.rows.size()) <= e_max) {
                size_t old = g.rows.size();
                g.rows.resize(static_cast<size_t>(e_max) + 1);
                for (size_t e = old; e < g.rows.size(); ++e) {
                    g.rows[e].assign(2 * e + 1, BigCount(0));
                }
            }
            states.push_back(State{key, &g, {}, {}, nullptr, {}});
        }
    }

    for (State& st : states) {
        const auto& [m, l] = st.key;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;
            std::vector<int> rest = m;
            rest.erase(rest.begin() + static_cast<long>(i));
            st.distinct.push_back(m[i]);
            st.after_special.push_back(&grids_.at(Key{rest, l}));
        }
        if (l > 0) st.after_leaf = &grids_.at(Key{m, l - 1});
        for (const auto& m1 : submultisets(m)) {
            std::vector<int> m2;
            std::set_difference(m.begin(), m.end(), m1.begin(), m1.end(),
                                std::back_inserter(m2));
            for (int l1 = 0; l1 <= l; ++l1) {
                st.split_pairs.emplace_back(&grids_.at(Key{m1, l1}),
                                            &grids_.at(Key{m2, l - l1}));
            }
        }
    }

    for (int e = 0; e <= e_max; ++e) {
        for (State& st : states) {
            Grid& g = *st.grid;
            if (g.built >= e) continue;
            if (e == 0) {
                if (st.key.first.empty() && st.key.second == 0) g.rows[0][0] = 1;
                continue;
            }
            auto& row = g.rows[static_cast<size_t>(e)];
            for (int d = 1; d <= 2 * e; ++d) {
                BigCount val = grid_cell(g, e - 1, d + r_ - 2);
                for (size_t k = 0; k < st.distinct.size(); ++k) {
                    val += grid_cell(*st.after_special[k], e - 1, d + st.distinct[k] - 2);
                }
                if (st.after_leaf) val += grid_cell(*st.after_leaf, e - 1, d - 1);
                for (auto [ga, gb] : st.split_pairs) {
                    for (int i = 0; i < e; ++i) {
                        const int j_hi = std::min(d - 2, 2 * i);
                        for (int j = 0; j <= j_hi; ++j) {
                            const BigCount& x = grid_cell(*ga, i, j);
                            if (x == 0) continue;
                            const BigCount& y = grid_cell(*gb, e - 1 - i, d - 2 - j);
                            if (y == 0) continue;
                            val += x * y;
                        }
                    }
                }
                row[static_cast<size_t>(d)] = std::move(val);
            }
        }
        for (State& st : states) {
            if (st.grid->built < e) st.grid->built = e;
        }
    }
}

const BigCount& ConstrainedCounter::cell(long long e, long long d, std::vector<int> specials,
                                         int leaves) {
    if (e < 0 || d < 0 || d > 2 * e || leaves < 0) return zero_;
    std::sort(specials.begin(), specials.end());
    ensure(specials, leaves, static_cast<int>(e));
    return grid_cell(grids_.at(Key{specials, leaves}), e, d);
}

BigCount ConstrainedCounter::rooted_anywhere(const std::vector<int>& specials, int leaves,
                                             long long e_total) {
    if (e_total < 0 || leaves < 0) return 0;
    std::vector<int> m = specials;
    std::sort(m.begin(), m.end());
    BigCount total = cell(e_total, r_, m, leaves);
    for (size_t i = 0; i < m.size(); ++i) {
        if (i > 0 && m[i] == m[i - 1]) continue;
        std::vector<int> rest = m;
        rest.erase(rest.begin() + static_cast<long>(i));
        total += cell(e_total, m[i], rest, leaves);
    }
    return total;
}

BigCount constrained_sphere_count(int r, const std::vector<int>& specials, int leaves,
                                  long long e_total) {
    ConstrainedCounter counter(r);
    return counter.rooted_anywhere(specials, leaves, e_total);
}

}  // namespace mapcensus
