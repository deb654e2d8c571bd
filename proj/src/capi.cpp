#include "mapcensus.h"

#include "cache.hpp"
#include "census_context.hpp"
#include "dart_oracle.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace mapcensus;

extern "C" {

struct mc_census {
    CensusContext ctx;
    std::string last_error;
};

const char* mc_version(void) { return "1.0.0"; }

const char* mc_status_name(mc_status status) {
    switch (status) {
        case MC_OK: return "ok";
        case MC_INVALID_ARGUMENT: return "invalid argument";
        case MC_NON_EXACT_DIVISION: return "non-exact division";
        case MC_NEGATIVE_COUNT: return "negative count";
        case MC_BUDGET_EXCEEDED: return "oracle budget exceeded";
        case MC_VERIFY_MISMATCH: return "verification mismatch";
        case MC_IO_ERROR: return "i/o error";
        case MC_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

mc_census* mc_census_new(void) { return new (std::nothrow) mc_census(); }

void mc_census_free(mc_census* census) { delete census; }

const char* mc_last_error(const mc_census* census) {
    return census ? census->last_error.c_str() : "null handle";
}

void mc_string_free(char* s) { std::free(s); }

}  // extern "C"

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
mc_status guarded(mc_census* census, Fn&& fn) {
    if (census == nullptr) return MC_INVALID_ARGUMENT;
    census->last_error.clear();
    try {
        return fn();
    } catch (const NonExactDivision& e) {
        census->last_error = e.what();
        return MC_NON_EXACT_DIVISION;
    } catch (const NegativeCount& e) {
        census->last_error = e.what();
        return MC_NEGATIVE_COUNT;
    } catch (const oracle::OracleBudgetExceeded& e) {
        census->last_error = e.what();
        return MC_BUDGET_EXCEEDED;
    } catch (const CacheError& e) {
        census->last_error = e.what();
        return MC_IO_ERROR;
    } catch (const std::invalid_argument& e) {
        census->last_error = e.what();
        return MC_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        census->last_error = e.what();
        return MC_INTERNAL_ERROR;
    }
}

mc_status emit_count(mc_census* census, const BigCount& value, char** out_count) {
    if (out_count == nullptr) {
        census->last_error = "null output pointer";
        return MC_INVALID_ARGUMENT;
    }
    *out_count = dup_string(value.str());
    return *out_count != nullptr ? MC_OK : MC_INTERNAL_ERROR;
}

}  // namespace

extern "C" {

mc_status mc_rooted_count(mc_census* census, mc_surface surface, int r, long long vertices,
                          char** out_count) {
    return guarded(census, [&]() -> mc_status {
        if (r < 3 || vertices < 1 || surface < MC_SURFACE_SPHERE || surface > MC_SURFACE_KLEIN) {
            census->last_error = "need r >= 3, vertices >= 1 and a valid surface";
            return MC_INVALID_ARGUMENT;
        }
        BigCount value = census->ctx.rooted(static_cast<Surface>(surface), r, vertices);
        return emit_count(census, value, out_count);
    });
}

mc_status mc_sensed_count(mc_census* census, int r, long long vertices, char** out_count) {
    return guarded(census, [&]() -> mc_status {
        if (r < 3 || vertices < 1 || (static_cast<long long>(r) * vertices) % 2 != 0) {
            census->last_error = "need r >= 3, vertices >= 1 and r*vertices even";
            return MC_INVALID_ARGUMENT;
        }
        BigCount value = census->ctx.sensed(r, vertices);
        return emit_count(census, value, out_count);
    });
}

mc_status mc_verify(mc_census* census, const char* suite, int budget_darts, char** out_report,
                    int* out_failures) {
    return guarded(census, [&]() -> mc_status {
        if (suite == nullptr || out_report == nullptr || out_failures == nullptr) {
            census->last_error = "null argument";
            return MC_INVALID_ARGUMENT;
        }
        VerifyResult result =
            verify_suite(census->ctx, suite, budget_darts > 0 ? budget_darts : 12);
        *out_report = dup_string(result.report);
        *out_failures = result.failures;
        if (*out_report == nullptr) return MC_INTERNAL_ERROR;
        if (result.failures > 0) {
            census->last_error = std::to_string(result.failures) + " comparison(s) failed";
            return MC_VERIFY_MISMATCH;
        }
        return MC_OK;
    });
}

mc_status mc_cache_store(mc_census* census, const char* path) {
    return guarded(census, [&]() -> mc_status {
        if (path == nullptr) {
            census->last_error = "null path";
            return MC_INVALID_ARGUMENT;
        }
        cache_store(census->ctx, path);
        return MC_OK;
    });
}

mc_status mc_cache_load(mc_census* census, const char* path) {
    return guarded(census, [&]() -> mc_status {
        if (path == nullptr) {
            census->last_error = "null path";
            return MC_INVALID_ARGUMENT;
        }
        cache_load(census->ctx, path);
        return MC_OK;
    });
}

}  // extern "C"
