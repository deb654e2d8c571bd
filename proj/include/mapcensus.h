/* mapcensus: exact counts of rooted and sensed r-regular maps on the torus,
 * projective plane and Klein bottle.
 *
 * All counts are returned as decimal strings (they outgrow any fixed-width
 * integer quickly); release them with mc_string_free. A handle caches the
 * dynamic-programming tables it builds, so reusing one handle across calls
 * is much cheaper than creating one per call. Handles are not thread-safe;
 * use one handle per thread.
 */
#ifndef MAPCENSUS_H
#define MAPCENSUS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
    MC_OK = 0,
    MC_INVALID_ARGUMENT = 1,
    MC_NON_EXACT_DIVISION = 2, /* an integrality assertion failed */
    MC_NEGATIVE_COUNT = 3,     /* a recurrence cell went below zero */
    MC_BUDGET_EXCEEDED = 4,    /* oracle enumeration past its dart budget */
    MC_VERIFY_MISMATCH = 5,
    MC_IO_ERROR = 6,
    MC_INTERNAL_ERROR = 7
} mc_status;

typedef enum mc_surface {
    MC_SURFACE_SPHERE = 0,
    MC_SURFACE_TORUS = 1,
    MC_SURFACE_PROJECTIVE = 2,
    MC_SURFACE_KLEIN = 3
} mc_surface;

typedef struct mc_census mc_census;

const char* mc_version(void);
const char* mc_status_name(mc_status status);

mc_census* mc_census_new(void);
void mc_census_free(mc_census* census);

/* Message for the most recent failing call on this handle; empty string if
 * none. Owned by the handle. */
const char* mc_last_error(const mc_census* census);

/* Rooted r-regular maps with the given number of vertices (r >= 3,
 * vertices >= 1; zero when r*vertices is odd). */
mc_status mc_rooted_count(mc_census* census, mc_surface surface, int r, long long vertices,
                          char** out_count);

/* Sensed r-regular maps on the torus with the given number of vertices.
 * r*vertices must be even. */
mc_status mc_sensed_count(mc_census* census, int r, long long vertices, char** out_count);

/* Runs a verification suite: "tables" (recompute the published tables),
 * "crosscheck" (closed forms against recurrences, census against closed
 * census), "oracle" (exhaustive dart enumeration up to budget_darts darts),
 * or "all". Returns the text report in *out_report and the number of failed
 * comparisons in *out_failures; the status is MC_VERIFY_MISMATCH when any
 * comparison failed. Pass budget_darts <= 0 for the default of 12. */
mc_status mc_verify(mc_census* census, const char* suite, int budget_darts, char** out_report,
                    int* out_failures);

/* Persist all tables built so far to a text file / restore them. Loading
 * validates a checksum and re-checks random cells against recomputation. */
mc_status mc_cache_store(mc_census* census, const char* path);
mc_status mc_cache_load(mc_census* census, const char* path);

void mc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MAPCENSUS_H */
