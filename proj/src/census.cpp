#include "census.hpp"

#include "closed_forms.hpp"

#include <cstdio>

namespace mapcensus {

namespace {

long long to_ll(const BigRat& x) { return numerator(x).convert_to<long long>(); }

bool nonneg_int(const BigRat& x) { return is_integer(x) && x >= 0; }

// Binomial with a possibly fractional top. Terms carrying a fractional top
// always come with a vanishing sequence factor; the k = 0 case must still be
// 1 so that coefficient-only products survive.
BigCount bin_of(const BigRat& top, long long k) {
    if (k == 0) return 1;
    if (!is_integer(top)) return 0;
    return binomial(to_ll(top), k);
}

BigCount sigma4_at(const BigRat& x) { return nonneg_int(x) ? closed::sigma4(to_ll(x)) : 0; }
BigCount rho4_at(const BigRat& x) { return nonneg_int(x) ? closed::rho4(to_ll(x)) : 0; }
BigCount omega4_at(const BigRat& x) {
    return (nonneg_int(x) && x >= 1) ? closed::omega4(to_ll(x)) : 0;
}

// sigma3/tau3 arguments in the census formulas are vertex counts.
BigCount sigma3_vertices(const BigRat& x) {
    if (!nonneg_int(x)) return 0;
    const long long v = to_ll(x);
    if (v % 2 != 0) return 0;
    return closed::sigma3(v / 2);
}

BigCount tau3_vertices(const BigRat& x) {
    if (!nonneg_int(x)) return 0;
    const long long v = to_ll(x);
    if (v < 2 || v % 2 != 0) return 0;
    return closed::tau3(v / 2);
}

BigCount tau4_vertices(const BigRat& x) {
    return (nonneg_int(x) && x >= 1) ? closed::tau4(to_ll(x)) : 0;
}

// One bracket term: rational coefficient times an already-evaluated sequence
// value. Every surviving term must be a nonnegative integer.
struct BracketSum {
    BigCount total = 0;

    void add(const BigRat& coeff, const BigCount& seq_value, int weight = 1) {
        if (seq_value == 0 || coeff == 0) return;
        BigRat term = coeff * BigRat(seq_value) * weight;
        BigCount value = rat_to_count(term);
        if (value < 0) throw NegativeCount("census bracket term below zero");
        total += value;
    }
};

}  // namespace

BigCount q_leaf3(int i, long long v, ConstrainedCounter& counter3) {
    if (i < 1 || v < i) return 0;
    if (i == 1) {
        if (v % 2 != 0) return 0;
        const long long e_total = (3 * (v - 1) + 1) / 2;
        BigCount anywhere = counter3.rooted_anywhere({}, 1, e_total);
        if (anywhere == 0) return 0;
        return exact_div(anywhere, 2 * e_total - 1);
    }
    if (i == 2 && v == 2) return 1;
    BigCount sub = q_leaf3(i - 1, v - 2, counter3);
    if (sub == 0) return 0;
    const long long coeff = 3 * v - 2 * i - 4;
    if (coeff < 0) {
        std::fprintf(stderr, "q_leaf3 anomaly: negative coefficient at i=%d v=%lld\n", i, v);
        return 0;
    }
    BigCount num = coeff * sub;
    try {
        return exact_div(num, i - 1);
    } catch (const NonExactDivision&) {
        std::fprintf(stderr, "q_leaf3 anomaly: fractional step at i=%d v=%lld\n", i, v);
        return 0;
    }
}

BigCount sensed_tau4(long long v) {
    if (v < 1) throw std::invalid_argument("sensed_tau4: v must be >= 1");
    const BigRat V(v);
    BracketSum sum;

    // O(0;[2^4]), multiplicity 1.
    sum.add(BigRat(bin_of(2 + V / 2, 4)), sigma4_at(V / 2));
    sum.add(V / 2, omega4_at(V / 2));
    sum.add(V * BigRat(binomial(v, 2)), rho4_at((V - 2) / 2));
    sum.add(V * V * (V + 1) / 2, rho4_at((V - 1) / 2));
    sum.add(V * BigRat(bin_of((V + 2) / 2, 2)), rho4_at(V / 2));
    sum.add(V * BigRat(bin_of((V + 3) / 2, 3)), sigma4_at((V - 1) / 2));
    sum.add(BigRat(binomial(v, 2) * bin_of((V + 2) / 2, 2)), sigma4_at((V - 2) / 2));
    sum.add((V + 1) / 2 * BigRat(binomial(v, 3)), sigma4_at((V - 3) / 2));
    sum.add(BigRat(binomial(v, 4)), sigma4_at((V - 4) / 2));

    // O(0;[2,4^2]), multiplicity 2.
    sum.add((V + 8) / 4 * BigRat(bin_of(1 + V / 4, 2)), sigma4_at(V / 4), 2);
    sum.add(V * (V + 3) / 4, rho4_at((V - 1) / 4), 2);
    sum.add(V / 2 * BigRat(bin_of((V + 6) / 4, 2)), sigma4_at((V - 2) / 4), 2);
    sum.add(V * (V + 2) / 8, rho4_at((V - 2) / 4), 2);
    sum.add(V * (V - 2) / 4, rho4_at((V - 4) / 4), 2);

    // O(0;[3^3]), multiplicity 2.
    sum.add(BigRat(bin_of(2 + V / 3, 3)), sigma4_at(V / 3), 2);

    // O(0;[2,3,6]), multiplicity 2.
    sum.add((V + 12) / 6 * (V + 6) / 6 * (V / 6), sigma4_at(V / 6), 2);
    sum.add((V + 9) / 6 * (V + 3) / 6 * (V / 3), sigma4_at((V - 3) / 6), 2);

    for (long long l : divisors(v)) {
        sum.add(BigRat(jordan_totient2(l)), tau4_vertices(BigRat(v / l)));
    }
    return exact_div(sum.total, BigCount(4) * v);
}

BigCount sensed_tau3(long long v, ConstrainedCounter& counter3) {
    if (v < 2 || v % 2 != 0) throw std::invalid_argument("sensed_tau3: v must be even, >= 2");
    const BigRat V(v);
    BracketSum sum;

    auto qleaf = [&](int i, const BigRat& arg) -> BigCount {
        if (!nonneg_int(arg)) return 0;
        return q_leaf3(i, to_ll(arg), counter3);
    };

    // O(0;[2^4]), multiplicity 1: i dangling ends, 4-i face points.
    sum.add(BigRat(bin_of(2 + V / 4, 4)), sigma3_vertices(V / 2));
    for (int i = 1; i <= 4; ++i) {
        sum.add(BigRat(3 * v, 2 * i) * BigRat(bin_of(2 + (V - 2 * i) / 4, 4 - i)),
                qleaf(i, V / 2 + i));
    }

    // O(0;[3^3]), multiplicity 2: i index-3 points at degree-1 vertices.
    sum.add(BigRat(bin_of(2 + V / 6, 3)), sigma3_vertices(V / 3), 2);
    for (int i = 1; i <= 3; ++i) {
        sum.add(BigRat(v, i) * BigRat(bin_of((V + 12 - 4 * i) / 6, 3 - i)),
                qleaf(i, (V + 2 * i) / 3), 2);
    }

    // O(0;[2,4^2]), multiplicity 2.
    sum.add(BigRat(3 * v, 4) * BigRat(bin_of((V + 12) / 8, 2)), qleaf(1, V / 4 + 1), 2);
    sum.add((2 + V / 8) * BigRat(bin_of(1 + V / 8, 2)), sigma3_vertices(V / 4), 2);

    // O(0;[2,3,6]), multiplicity 2.
    sum.add((2 + V / 12) * (1 + V / 12) * (V / 12), sigma3_vertices(V / 6), 2);
    sum.add(V * BigRat(bin_of((V + 16) / 12, 2)), qleaf(1, (V + 4) / 6), 2);
    sum.add(V / 2 * (V + 10) / 12, qleaf(2, (V + 10) / 6), 2);
    sum.add(V * BigRat(bin_of((V + 18) / 12, 2)), qleaf(1, V / 6 + 1), 2);

    for (long long l : divisors(v)) {
        sum.add(BigRat(jordan_totient2(l)), tau3_vertices(BigRat(v / l)));
    }
    return exact_div(sum.total, BigCount(3) * v);
}

SensedBreakdown sensed_breakdown(int r, long long v, RecurrenceEngine& engine,
                                 ConstrainedCounter& counter) {
    if (r < 3 || v < 1 || (static_cast<long long>(r) * v) % 2 != 0) {
        throw std::invalid_argument("sensed_breakdown: need r >= 3 and r*v even");
    }
    SensedBreakdown out;
    for (const OrbifoldSignature& sig : toroidal_orbifolds()) {
        BigCount c = sig.multiplicity * count_quotient_maps(sig, r, v, counter);
        out.terms.push_back({sig.name(), c});
        out.bracket += c;
    }
    BigCount div_sum = 0;
    for (long long l : divisors(v)) {
        div_sum += jordan_totient2(l) * engine.rooted_regular(Surface::Torus, v / l);
    }
    out.terms.push_back({"divisor-sum", div_sum});
    out.bracket += div_sum;
    return out;
}

BigCount sensed_general(int r, long long v, RecurrenceEngine& engine,
                        ConstrainedCounter& counter) {
    SensedBreakdown b = sensed_breakdown(r, v, engine, counter);
    return exact_div(b.bracket, BigCount(r) * v);
}

}  // namespace mapcensus
