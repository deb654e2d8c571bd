#include "orbifold.hpp"

#include <algorithm>

namespace mapcensus {

std::string OrbifoldSignature::name() const {
    std::string out = "[";
    for (size_t i = 0; i < branch_indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(branch_indices[i]);
    }
    return out + "]";
}

const std::vector<OrbifoldSignature>& toroidal_orbifolds() {
    static const std::vector<OrbifoldSignature> sigs = {
        {{2, 2, 2, 2}, 2, 1},
        {{2, 4, 4}, 4, 2},
        {{3, 3, 3}, 3, 2},
        {{2, 3, 6}, 6, 2},
    };
    return sigs;
}

int BranchPlacement::dangling() const {
    int d = 0;
    for (const auto& g : groups) d += g.at_dangling;
    return d;
}

std::vector<int> BranchPlacement::special_degrees(int r) const {
    std::vector<int> out;
    for (const auto& g : groups) {
        out.insert(out.end(), static_cast<size_t>(g.at_vertex), r / g.index);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> BranchPlacement::face_indices() const {
    std::vector<int> out;
    for (const auto& g : groups) out.insert(out.end(), static_cast<size_t>(g.at_face), g.index);
    return out;
}

std::vector<BranchPlacement> enumerate_placements(const OrbifoldSignature& sig, int r) {
    std::vector<std::pair<int, int>> groups;  // (index, count)
    for (int m : sig.branch_indices) {
        if (!groups.empty() && groups.back().first == m) {
            ++groups.back().second;
        } else {
            groups.emplace_back(m, 1);
        }
    }

    std::vector<BranchPlacement> out{{}};
    for (auto [m, count] : groups) {
        const bool vertex_ok = (r % m == 0);
        const bool dangling_ok = (m == 2);
        std::vector<BranchPlacement> next;
        for (const auto& prefix : out) {
            for (int at_vertex = 0; at_vertex <= (vertex_ok ? count : 0); ++at_vertex) {
                for (int at_dangling = 0; at_dangling <= (dangling_ok ? count - at_vertex : 0);
                     ++at_dangling) {
                    BranchPlacement p = prefix;
                    p.groups.push_back(
                        {m, count - at_vertex - at_dangling, at_vertex, at_dangling});
                    next.push_back(std::move(p));
                }
            }
        }
        out = std::move(next);
    }

    if (r % 2 == 0) {
        // Even r: the degree sum r*k + sum(specials) must exceed the dangling
        // count by an even amount independently of k.
        std::erase_if(out, [&](const BranchPlacement& p) {
            long long deg = 0;
            for (int s : p.special_degrees(r)) deg += s;
            return (deg + p.dangling()) % 2 != 0;
        });
    }
    return out;
}

std::optional<QuotientShape> shape_of(const BranchPlacement& placement,
                                      const OrbifoldSignature& sig, int r, long long v) {
    const int period = sig.period;
    long long lifted_specials = 0;
    for (const auto& g : placement.groups) {
        lifted_specials += static_cast<long long>(g.at_vertex) * (period / g.index);
    }
    if (v < lifted_specials || (v - lifted_specials) % period != 0) return std::nullopt;

    QuotientShape shape;
    shape.regular_vertices = (v - lifted_specials) / period;
    shape.special_degrees = placement.special_degrees(r);
    shape.e_dang = placement.dangling();
    shape.face_branch_multiset = placement.face_indices();

    long long degree_sum = static_cast<long long>(r) * shape.regular_vertices;
    for (int s : shape.special_degrees) degree_sum += s;
    if (degree_sum < shape.e_dang || (degree_sum - shape.e_dang) % 2 != 0) return std::nullopt;
    shape.e_full = (degree_sum - shape.e_dang) / 2;

    shape.v_prime = shape.regular_vertices +
                    static_cast<long long>(shape.special_degrees.size()) + shape.e_dang;
    shape.n_prime = shape.e_full + shape.e_dang;
    shape.f_prime = 2 - shape.v_prime + shape.n_prime;
    shape.root_positions = 2 * shape.e_full + shape.e_dang;
    return shape;
}

BigCount face_placement_ways(const QuotientShape& shape) {
    BigCount ways = 1;
    long long faces_left = shape.f_prime;
    size_t i = 0;
    const auto& fb = shape.face_branch_multiset;
    while (i < fb.size()) {
        size_t j = i;
        while (j < fb.size() && fb[j] == fb[i]) ++j;
        const long long group = static_cast<long long>(j - i);
        ways *= binomial(faces_left, group);
        faces_left -= group;
        i = j;
    }
    return ways;
}

BigCount count_quotient_maps(const OrbifoldSignature& sig, int r, long long v,
                             ConstrainedCounter& counter) {
    if (v < 1) return 0;
    BigCount total = 0;
    for (const BranchPlacement& placement : enumerate_placements(sig, r)) {
        auto shape = shape_of(placement, sig, r, v);
        if (!shape) continue;
        BigCount ways = face_placement_ways(*shape);
        if (ways == 0) continue;
        BigCount rooted = counter.rooted_anywhere(shape->special_degrees,
                                                  static_cast<int>(shape->e_dang),
                                                  shape->n_prime);
        total += ways * rooted;
    }
    return total;
}

}  // namespace mapcensus
