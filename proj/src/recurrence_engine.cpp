#include "recurrence_engine.hpp"

namespace mapcensus {

const BigCount DegreeTable::zero_ = 0;

const char* surface_name(Surface s) {
    switch (s) {
        case Surface::Sphere: return "sphere";
        case Surface::Torus: return "torus";
        case Surface::Projective: return "projective";
        case Surface::Klein: return "klein";
    }
    return "?";
}

std::string FamilyId::tag() const {
    std::string base;
    switch (family) {
        case Family::S: base = "s"; break;
        case Family::D: base = "d"; break;
        case Family::Q: base = "q" + std::to_string(second_degree); break;
        case Family::T: base = "t"; break;
        case Family::P: base = "p"; break;
        case Family::B: base = "b"; break;
        case Family::Qhat2: base = "qhat2"; break;
        case Family::Qhat3: base = "qhat3"; break;
    }
    return base + ".r" + std::to_string(r);
}

const BigCount& DegreeTable::cell(long long n, long long d) const {
    if (n < 0 || d < 0 || d > 2 * n || n > n_max()) return zero_;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(d)];
}

std::vector<BigCount>& DegreeTable::mutable_row(int n) {
    return rows_[static_cast<size_t>(n)];
}

void DegreeTable::resize_rows(int n_max) {
    int old = static_cast<int>(rows_.size());
    rows_.resize(static_cast<size_t>(n_max) + 1);
    for (int n = old; n <= n_max; ++n) {
        rows_[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n) + 1, BigCount(0));
    }
}

namespace {

// sum_{i<n, j<=d-2} a(i,j) * b(n-1-i, d-2-j): the root-loop contraction term,
// with `a` in the inner (i,j) slot.
BigCount conv(const DegreeTable& a, const DegreeTable& b, int n, int d) {
    BigCount acc = 0;
    for (int i = 0; i < n; ++i) {
        const int j_hi = std::min<int>(d - 2, 2 * i);
        for (int j = 0; j <= j_hi; ++j) {
            const BigCount& x = a.cell(i, j);
            if (x == 0) continue;
            const BigCount& y = b.cell(n - 1 - i, d - 2 - j);
            if (y == 0) continue;
            acc += x * y;
        }
    }
    return acc;
}

}  // namespace

RecurrenceEngine::RecurrenceEngine(int r) : r_(r) {
    if (r < 3) throw std::invalid_argument("RecurrenceEngine: r must be >= 3");
    s_ = DegreeTable({Family::S, r, 0});
    d_ = DegreeTable({Family::D, r, 0});
    t_ = DegreeTable({Family::T, r, 0});
    p_ = DegreeTable({Family::P, r, 0});
    b_ = DegreeTable({Family::B, r, 0});
    for (int i = 1; i <= r - 2; ++i) q_.push_back(DegreeTable({Family::Q, r, i}));
    if (r == 4) {
        qhat2_ = DegreeTable({Family::Qhat2, r, 0});
        qhat3_ = DegreeTable({Family::Qhat3, r, 0});
    }
}

const DegreeTable& RecurrenceEngine::q(int i) const {
    if (i < 1 || i > r_ - 2) throw std::invalid_argument("q(i): i out of range");
    return q_[static_cast<size_t>(i - 1)];
}

const DegreeTable& RecurrenceEngine::qhat2() const {
    if (r_ != 4) throw std::invalid_argument("qhat2 is defined for r = 4 only");
    return qhat2_;
}

const DegreeTable& RecurrenceEngine::qhat3() const {
    if (r_ != 4) throw std::invalid_argument("qhat3 is defined for r = 4 only");
    return qhat3_;
}

std::vector<DegreeTable*> RecurrenceEngine::all_tables() {
    std::vector<DegreeTable*> out{&s_, &d_, &t_, &p_, &b_};
    for (auto& q : q_) out.push_back(&q);
    if (r_ == 4) {
        out.push_back(&qhat2_);
        out.push_back(&qhat3_);
    }
    return out;
}

void RecurrenceEngine::require(int n_max) {
    if (n_max <= built_) return;
    for (DegreeTable* t : all_tables()) t->resize_rows(n_max);
    build_rows(built_ + 1, n_max);
    built_ = n_max;
}

void RecurrenceEngine::adopt_rows(int n_built) {
    for (DegreeTable* t : all_tables()) {
        if (t->n_max() < n_built) throw std::logic_error("adopt_rows: rows not present");
    }
    if (n_built > built_) built_ = n_built;
}

void RecurrenceEngine::build_rows(int n_from, int n_to) {
    const int r = r_;
    for (int n = n_from; n <= n_to; ++n) {
        if (n == 0) {
            s_.mutable_row(0)[0] = 1;  // the vertex map; all other families empty at n = 0
            continue;
        }
        auto& srow = s_.mutable_row(n);
        auto& drow = d_.mutable_row(n);
        auto& trow = t_.mutable_row(n);
        auto& prow = p_.mutable_row(n);
        auto& brow = b_.mutable_row(n);
        for (int d = 1; d <= 2 * n; ++d) {
            srow[d] = s_.cell(n - 1, d + r - 2) + conv(s_, s_, n, d);

            for (int i = 1; i <= r - 2; ++i) {
                auto& qi = q_[static_cast<size_t>(i - 1)];
                qi.mutable_row(n)[d] = qi.cell(n - 1, d + r - 2) + i * s_.cell(n - 1, d + i - 2) +
                                       2 * conv(qi, s_, n, d);
            }

            {
                BigCount val = d_.cell(n - 1, d + r - 2);
                for (int i = 1; i <= r - 2; ++i) val -= q(i).cell(n - 1, d + r - 2 - i);
                val += BigCount(d) * (d - 1) / 2 * s_.cell(n - 1, d - 2);
                val += 2 * conv(d_, s_, n, d);
                if (val < 0) {
                    throw NegativeCount("negative intermediate count in d(" + std::to_string(n) +
                                        "," + std::to_string(d) + ") for r=" + std::to_string(r));
                }
                drow[d] = val;
            }

            trow[d] = t_.cell(n - 1, d + r - 2) + d_.cell(n - 1, d - 2) + 2 * conv(t_, s_, n, d);

            prow[d] = p_.cell(n - 1, d + r - 2) + (d - 1) * s_.cell(n - 1, d - 2) +
                      2 * conv(p_, s_, n, d);

            brow[d] = b_.cell(n - 1, d + r - 2) + (d - 1) * p_.cell(n - 1, d - 2) +
                      d_.cell(n - 1, d - 2) + conv(p_, p_, n, d) + 2 * conv(b_, s_, n, d);

            if (r == 4) {
                qhat2_.mutable_row(n)[d] = qhat2_.cell(n - 1, d + 2) + q(1).cell(n - 1, d - 1) +
                                           2 * conv(qhat2_, s_, n, d) + conv(q(1), q(1), n, d);
                qhat3_.mutable_row(n)[d] = qhat3_.cell(n - 1, d + 2) + qhat2_.cell(n - 1, d - 1) +
                                           2 * conv(qhat3_, s_, n, d) +
                                           2 * conv(q(1), qhat2_, n, d);
            }
        }
    }
}

BigCount RecurrenceEngine::rooted_regular(Surface surface, long long vertices) {
    if (vertices < 1) return 0;
    if ((static_cast<long long>(r_) * vertices) % 2 != 0) return 0;
    const long long n = static_cast<long long>(r_) * vertices / 2;
    require(static_cast<int>(n));
    switch (surface) {
        case Surface::Sphere: return s_.cell(n, r_);
        case Surface::Torus: return t_.cell(n, r_);
        case Surface::Projective: return p_.cell(n, r_);
        case Surface::Klein: return b_.cell(n, r_);
    }
    return 0;
}

}  // namespace mapcensus
