#include "verify.hpp"

#include "closed_forms.hpp"
#include "dart_oracle.hpp"
#include "golden_tables.hpp"

#include <sstream>

namespace mapcensus {

void VerifyResult::merge(const VerifyResult& other) {
    comparisons += other.comparisons;
    failures += other.failures;
    report += other.report;
}

namespace {

class Reporter {
public:
    void check(const std::string& label, const BigCount& expected, const BigCount& got) {
        ++result_.comparisons;
        if (expected == got) {
            out_ << "ok   " << label << " = " << expected.str() << "\n";
        } else {
            ++result_.failures;
            out_ << "FAIL " << label << ": expected " << expected.str() << ", got "
                 << got.str() << "\n";
        }
    }

    VerifyResult finish(const std::string& suite) {
        out_ << suite << ": " << (result_.comparisons - result_.failures) << "/"
             << result_.comparisons << " comparisons passed\n";
        result_.report = out_.str();
        return result_;
    }

private:
    VerifyResult result_;
    std::ostringstream out_;
};

// Feasible torus vertex counts with r*v <= budget_darts darts.
std::vector<long long> budget_vertex_counts(int r, int budget_darts) {
    std::vector<long long> out;
    for (long long v = 1; r * v <= budget_darts; ++v) {
        if ((r * v) % 2 == 0) out.push_back(v);
    }
    return out;
}

}  // namespace

VerifyResult verify_tables(CensusContext& ctx) {
    Reporter rep;
    for (const GoldenRow& row : golden_rows()) {
        std::ostringstream label;
        label << (row.sensed ? "sensed" : "rooted") << "." << surface_name(row.surface) << ".r"
              << row.r << ".v" << row.vertices;
        BigCount got = row.sensed ? ctx.sensed(row.r, row.vertices)
                                  : ctx.rooted(row.surface, row.r, row.vertices);
        rep.check(label.str(), row.count, got);
    }
    return rep.finish("tables");
}

VerifyResult verify_crosscheck(CensusContext& ctx) {
    Reporter rep;
    RecurrenceEngine& e4 = ctx.engine(4);
    for (long long v = 1; v <= 10; ++v) {
        rep.check("sigma4(" + std::to_string(v) + ") vs s-table", closed::sigma4(v),
                  ctx.rooted(Surface::Sphere, 4, v));
        rep.check("tau4(" + std::to_string(v) + ") vs t-table", closed::tau4(v),
                  ctx.rooted(Surface::Torus, 4, v));
        rep.check("pi4(" + std::to_string(v) + ") vs p-table", closed::pi4(v),
                  ctx.rooted(Surface::Projective, 4, v));
        rep.check("kappa4(" + std::to_string(v) + ") vs b-table", closed::kappa4(v, e4),
                  ctx.rooted(Surface::Klein, 4, v));
    }
    for (long long n = 1; n <= 10; ++n) {
        rep.check("sigma3(" + std::to_string(n) + ") vs s-table", closed::sigma3(n),
                  ctx.rooted(Surface::Sphere, 3, 2 * n));
        rep.check("tau3(" + std::to_string(n) + ") vs t-table", closed::tau3(n),
                  ctx.rooted(Surface::Torus, 3, 2 * n));
        rep.check("pi3(" + std::to_string(n) + ") vs p-table", closed::pi3(n),
                  ctx.rooted(Surface::Projective, 3, 2 * n));
        rep.check("kappa3(" + std::to_string(n) + ") vs b-table", closed::kappa3(n),
                  ctx.rooted(Surface::Klein, 3, 2 * n));
    }
    for (long long v = 1; v <= 10; ++v) {
        rep.check("sensed_general(4," + std::to_string(v) + ") vs closed formula",
                  sensed_tau4(v), sensed_general(4, v, ctx.engine(4), ctx.counter(4)));
    }
    for (long long v = 2; v <= 20; v += 2) {
        rep.check("sensed_general(3," + std::to_string(v) + ") vs closed formula",
                  sensed_tau3(v, ctx.counter(3)),
                  sensed_general(3, v, ctx.engine(3), ctx.counter(3)));
    }
    return rep.finish("crosscheck");
}

VerifyResult verify_oracle(CensusContext& ctx, int budget_darts) {
    Reporter rep;
    for (int r = 3; r <= 6; ++r) {
        for (long long v : budget_vertex_counts(r, budget_darts)) {
            const int n = static_cast<int>(r * v / 2);
            rep.check("oracle rooted sphere r" + std::to_string(r) + " v" + std::to_string(v),
                      oracle::rooted_near_regular(0, r, n, r, budget_darts),
                      ctx.rooted(Surface::Sphere, r, v));
            rep.check("oracle rooted torus r" + std::to_string(r) + " v" + std::to_string(v),
                      oracle::rooted_near_regular(1, r, n, r, budget_darts),
                      ctx.rooted(Surface::Torus, r, v));
            rep.check("oracle sensed torus r" + std::to_string(r) + " v" + std::to_string(v),
                      oracle::sensed_regular(1, r, n, budget_darts),
                      sensed_general(r, v, ctx.engine(r), ctx.counter(r)));
        }
    }
    return rep.finish("oracle");
}

VerifyResult verify_suite(CensusContext& ctx, const std::string& suite, int budget_darts) {
    if (suite == "tables") return verify_tables(ctx);
    if (suite == "crosscheck") return verify_crosscheck(ctx);
    if (suite == "oracle") return verify_oracle(ctx, budget_darts);
    if (suite == "all") {
        VerifyResult all = verify_tables(ctx);
        all.merge(verify_crosscheck(ctx));
        all.merge(verify_oracle(ctx, budget_darts));
        return all;
    }
    throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace mapcensus
