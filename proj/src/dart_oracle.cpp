#include "dart_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace mapcensus {
namespace oracle {

bool DartMap::transitive() const {
    const int n = dart_count();
    if (n == 0) return false;
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {sigma[static_cast<size_t>(x)], alpha(x)}) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

namespace {

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = 1;
    }
    return cycles;
}

}  // namespace

int DartMap::vertex_count() const { return cycle_count(sigma); }

int DartMap::face_count() const {
    std::vector<int> sa(sigma.size());
    for (size_t x = 0; x < sigma.size(); ++x) {
        sa[x] = sigma[static_cast<size_t>(alpha(static_cast<int>(x)))];
    }
    return cycle_count(sa);
}

int DartMap::genus() const {
    const int v = vertex_count();
    const int n = dart_count() / 2;
    const int f = face_count();
    const int chi = v - n + f;
    if ((2 - chi) % 2 != 0) throw std::logic_error("odd Euler defect on an orientable map");
    return (2 - chi) / 2;
}

namespace {

// Enumerates every sigma whose dart-0 cycle has length root_degree and whose
// remaining cycle lengths are exactly `others`. Cycles are anchored at their
// smallest member, so each sigma is produced once.
template <typename Fn>
void enumerate_sigmas(int darts, int root_degree, std::vector<int> others, Fn&& fn) {
    std::sort(others.begin(), others.end());
    std::vector<int> sigma(static_cast<size_t>(darts), -1);
    std::vector<char> used(static_cast<size_t>(darts), 0);
    std::vector<char> len_taken(others.size(), 0);

    // Fills one cycle anchored at `anchor` with `remaining` more darts, then
    // recurses to the next anchor.
    auto fill = [&](auto&& self, auto&& next_cycle, int anchor, int prev, int remaining) -> void {
        if (remaining == 0) {
            sigma[static_cast<size_t>(prev)] = anchor;
            next_cycle(next_cycle);
            sigma[static_cast<size_t>(prev)] = -1;
            return;
        }
        for (int x = anchor + 1; x < darts; ++x) {
            if (used[static_cast<size_t>(x)]) continue;
            used[static_cast<size_t>(x)] = 1;
            sigma[static_cast<size_t>(prev)] = x;
            self(self, next_cycle, anchor, x, remaining - 1);
            sigma[static_cast<size_t>(prev)] = -1;
            used[static_cast<size_t>(x)] = 0;
        }
    };

    auto next_cycle = [&](auto&& self) -> void {
        int anchor = -1;
        for (int x = 0; x < darts; ++x) {
            if (!used[static_cast<size_t>(x)]) {
                anchor = x;
                break;
            }
        }
        if (anchor < 0) {
            fn(sigma);
            return;
        }
        used[static_cast<size_t>(anchor)] = 1;
        if (anchor == 0 && root_degree >= 0) {
            if (root_degree >= 1 && root_degree <= darts) {
                fill(fill, self, anchor, anchor, root_degree - 1);
            }
        } else {
            for (size_t k = 0; k < others.size(); ++k) {
                if (len_taken[k]) continue;
                if (k > 0 && others[k] == others[k - 1] && !len_taken[k - 1]) continue;
                len_taken[k] = 1;
                fill(fill, self, anchor, anchor, others[k] - 1);
                len_taken[k] = 0;
            }
        }
        used[static_cast<size_t>(anchor)] = 0;
    };

    next_cycle(next_cycle);
}

BigCount rooting_normalizer(int n_edges) {
    BigCount norm = 1;
    for (int i = 1; i < n_edges; ++i) norm *= 2 * i;  // 2^(n-1) * (n-1)!
    return norm;
}

}  // namespace

BigCount rooted_with_type(int genus, int root_degree, std::vector<int> others, int max_darts) {
    long long darts = root_degree;
    for (int l : others) darts += l;
    if (darts <= 0 || darts % 2 != 0) return 0;
    if (darts > max_darts) {
        throw OracleBudgetExceeded("oracle budget: " + std::to_string(darts) + " darts");
    }
    const int n_edges = static_cast<int>(darts / 2);
    BigCount labeled = 0;
    DartMap m;
    enumerate_sigmas(static_cast<int>(darts), root_degree, std::move(others),
                     [&](const std::vector<int>& sigma) {
                         m.sigma = sigma;
                         if (!m.transitive()) return;
                         if (m.genus() != genus) return;
                         ++labeled;
                     });
    return exact_div(labeled, rooting_normalizer(n_edges));
}

BigCount rooted_near_regular(int genus, int r, int n_edges, int d, int max_darts) {
    const long long rest = 2LL * n_edges - d;
    if (d < 1 || rest < 0 || rest % r != 0) return 0;
    std::vector<int> others(static_cast<size_t>(rest / r), r);
    return rooted_with_type(genus, d, std::move(others), max_darts);
}

BigCount rooted_second_dart(int genus, int r, int n_edges, int d1, int d2) {
    const long long rest = 2LL * n_edges - d1 - d2;
    if (d1 < 1 || d2 < 1 || rest < 0 || rest % r != 0) return 0;
    std::vector<int> others(static_cast<size_t>(rest / r), r);
    others.push_back(d2);
    // Marked darts sit at any non-root vertex of degree d2; when d2 == r the
    // marked vertex is indistinguishable from the regular ones.
    const long long vertices_of_d2 = (d2 == r) ? rest / r + 1 : 1;
    return d2 * vertices_of_d2 * rooted_with_type(genus, d1, std::move(others));
}

BigCount rooted_double_root(int genus, int r, int n_edges, int d_total) {
    BigCount total = 0;
    for (int d1 = 1; d1 < d_total; ++d1) {
        total += rooted_second_dart(genus, r, n_edges, d1, d_total - d1);
    }
    return total;
}

BigCount rooted_with_leaves(int genus, int r, int n_edges, int d, int leaves) {
    const long long rest = 2LL * n_edges - d - leaves;
    if (d < 1 || leaves < 0 || rest < 0 || rest % r != 0) return 0;
    std::vector<int> others(static_cast<size_t>(rest / r), r);
    others.insert(others.end(), static_cast<size_t>(leaves), 1);
    return rooted_with_type(genus, d, std::move(others));
}

BigCount rooted_any(int genus, int n_edges) {
    BigCount total = 0;
    const int darts = 2 * n_edges;
    // Partition the non-root darts over the root cycle length and every
    // multiset of other cycle lengths.
    std::vector<int> others;
    auto rec = [&](auto&& self, int remaining, int max_len, int root_degree) -> void {
        if (remaining == 0) {
            total += rooted_with_type(genus, root_degree, others);
            return;
        }
        for (int l = std::min(remaining, max_len); l >= 1; --l) {
            others.push_back(l);
            self(self, remaining - l, l, root_degree);
            others.pop_back();
        }
    };
    for (int d = 1; d <= darts; ++d) rec(rec, darts - d, darts, d);
    return total;
}

BigCount constrained_anywhere(int r, const std::vector<int>& specials, int leaves, int e_total) {
    long long degree_left = 2LL * e_total - leaves;
    for (int s : specials) degree_left -= s;
    if (degree_left < 0 || degree_left % r != 0) return 0;
    const long long regulars = degree_left / r;

    std::vector<int> m = specials;
    std::sort(m.begin(), m.end());
    const long long special_ones = static_cast<long long>(std::count(m.begin(), m.end(), 1));

    // (map, root, designation) triples; degree-1 designations pick which of
    // the degree-1 non-root vertices act as dangling ends.
    auto with_role = [&](int root_degree, const std::vector<int>& rest_specials,
                         long long rest_ones) -> BigCount {
        std::vector<int> others(static_cast<size_t>(regulars - (root_degree == r ? 1 : 0)),
                                r);
        for (int s : rest_specials) others.push_back(s);
        others.insert(others.end(), static_cast<size_t>(leaves), 1);
        const BigCount designations = binomial(rest_ones + leaves, leaves);
        return designations * rooted_with_type(0, root_degree, std::move(others));
    };

    BigCount total = 0;
    if (regulars >= 1) total += with_role(r, m, special_ones);
    for (size_t i = 0; i < m.size(); ++i) {
        if (i > 0 && m[i] == m[i - 1]) continue;
        std::vector<int> rest = m;
        rest.erase(rest.begin() + static_cast<long>(i));
        total += with_role(m[i], rest, special_ones - (m[i] == 1 ? 1 : 0));
    }
    return total;
}

namespace {

// Canonical trace of the sigma/alpha pair from one start dart, relabeling so
// alpha stays the pairing 2k <-> 2k+1. The minimum over start darts is a
// complete invariant of the centralizer orbit.
void trace_from(const std::vector<int>& sigma, int start, std::vector<uint8_t>& out) {
    const size_t darts = sigma.size();
    static thread_local std::vector<int> label, order;
    label.assign(darts, -1);
    order.clear();
    auto assign = [&](int dart) {
        label[static_cast<size_t>(dart)] = static_cast<int>(order.size());
        order.push_back(dart);
        label[static_cast<size_t>(dart ^ 1)] = static_cast<int>(order.size());
        order.push_back(dart ^ 1);
    };
    assign(start);
    out.clear();
    for (size_t i = 0; i < darts; ++i) {
        const int image = sigma[static_cast<size_t>(order[i])];
        if (label[static_cast<size_t>(image)] < 0) assign(image);
        out.push_back(static_cast<uint8_t>(label[static_cast<size_t>(image)]));
    }
}

}  // namespace

BigCount sensed_regular(int genus, int r, int n_edges, int max_darts) {
    const long long darts = 2LL * n_edges;
    if (darts <= 0 || darts % r != 0) return 0;
    if (darts > max_darts) {
        throw OracleBudgetExceeded("oracle budget: " + std::to_string(darts) + " darts");
    }
    std::vector<int> others(static_cast<size_t>(darts / r) - 1, r);
    std::set<std::vector<uint8_t>> classes;
    DartMap m;
    std::vector<uint8_t> best, cur;
    enumerate_sigmas(static_cast<int>(darts), r, std::move(others),
                     [&](const std::vector<int>& sigma) {
                         m.sigma = sigma;
                         if (!m.transitive()) return;
                         if (m.genus() != genus) return;
                         trace_from(sigma, 0, best);
                         for (int s = 1; s < static_cast<int>(sigma.size()); ++s) {
                             trace_from(sigma, s, cur);
                             if (cur < best) best.swap(cur);
                         }
                         classes.insert(best);
                     });
    return BigCount(classes.size());
}

}  // namespace oracle
}  // namespace mapcensus
