// census: command-line front end for the mapcensus shared library.
//
// Subcommands:
//   rooted  --surface S --r R --max-v N [--format csv|json]
//   sensed  --r R --max-v N [--format csv|json]
//   verify  --suite tables|crosscheck|oracle|all [--budget-darts B]
//   cache   store|load --cache-dir DIR
//
// Rows for odd r are indexed by even vertex counts (row v holds the count
// for 2v vertices), matching the published tables. Exit codes: 0 success,
// 1 verification or computation failure, 2 usage error.

#include "mapcensus.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct CensusDeleter {
    void operator()(mc_census* c) const { mc_census_free(c); }
};
using CensusHandle = std::unique_ptr<mc_census, CensusDeleter>;

struct StringDeleter {
    void operator()(char* s) const { mc_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int fail(mc_census* census, mc_status status, const std::string& what) {
    std::cerr << "census: " << what << ": " << mc_status_name(status);
    const char* detail = mc_last_error(census);
    if (detail != nullptr && detail[0] != '\0') std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    return 1;
}

long long row_vertices(int r, long long row) { return (r % 2 == 0) ? row : 2 * row; }

struct Row {
    long long index;
    std::string count;
};

void emit(const std::string& family, const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::json doc;
        doc["family"] = family;
        doc["rows"] = nlohmann::json::array();
        for (const Row& row : rows) {
            // Counts stay decimal strings: they exceed every fixed-width type.
            doc["rows"].push_back({{"v", row.index}, {"count", row.count}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const Row& row : rows) std::cout << row.index << "," << row.count << "\n";
    }
}

std::string cache_file(const std::string& dir) {
    return (std::filesystem::path(dir) / "tables.cache").string();
}

// Best-effort reuse of previously stored tables.
void try_cache_load(mc_census* census, const std::string& cache_dir) {
    if (cache_dir.empty()) return;
    const std::string path = cache_file(cache_dir);
    if (!std::filesystem::exists(path)) return;
    if (mc_cache_load(census, path.c_str()) != MC_OK) {
        std::cerr << "census: ignoring unusable cache " << path << " (" << mc_last_error(census)
                  << ")\n";
    }
}

int store_cache(mc_census* census, const std::string& cache_dir) {
    if (cache_dir.empty()) return 0;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    mc_status status = mc_cache_store(census, cache_file(cache_dir).c_str());
    if (status != MC_OK) return fail(census, status, "cache store");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of rooted and sensed r-regular maps on the torus, "
                 "projective plane and Klein bottle"};
    app.require_subcommand(1);

    std::string surface_name = "torus";
    int r = 4;
    long long max_v = 10;
    std::string format = "csv";
    std::string cache_dir;
    int budget_darts = 12;
    std::string suite = "all";
    std::string cache_action;

    CLI::App* rooted = app.add_subcommand("rooted", "Rooted r-regular map counts");
    rooted->add_option("--surface", surface_name, "sphere, torus, projective or klein")
        ->check(CLI::IsMember({"sphere", "torus", "projective", "klein"}));
    rooted->add_option("--r", r, "regular degree (>= 3)");
    rooted->add_option("--max-v", max_v, "last table row");
    rooted->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    rooted->add_option("--cache-dir", cache_dir, "directory for persisted tables");

    CLI::App* sensed = app.add_subcommand("sensed", "Sensed r-regular torus map counts");
    sensed->add_option("--r", r, "regular degree (>= 3)");
    sensed->add_option("--max-v", max_v, "last table row");
    sensed->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sensed->add_option("--cache-dir", cache_dir, "directory for persisted tables");

    CLI::App* verify = app.add_subcommand("verify", "Recompute and compare reference data");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"tables", "crosscheck", "oracle", "all"}));
    verify->add_option("--budget-darts", budget_darts, "oracle enumeration bound (default 12)");

    CLI::App* cache = app.add_subcommand("cache", "Persist or restore computed tables");
    cache->add_option("action", cache_action, "store or load")
        ->required()
        ->check(CLI::IsMember({"store", "load"}));
    cache->add_option("--cache-dir", cache_dir, "directory for persisted tables")->required();
    cache->add_option("--r", r, "regular degree to build before storing");
    cache->add_option("--max-v", max_v, "table rows to build before storing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    CensusHandle census(mc_census_new());
    if (!census) {
        std::cerr << "census: out of memory\n";
        return 1;
    }

    if (rooted->parsed() || sensed->parsed()) {
        try_cache_load(census.get(), cache_dir);
        const bool want_sensed = sensed->parsed();
        mc_surface surface = MC_SURFACE_TORUS;
        if (surface_name == "sphere") surface = MC_SURFACE_SPHERE;
        else if (surface_name == "projective") surface = MC_SURFACE_PROJECTIVE;
        else if (surface_name == "klein") surface = MC_SURFACE_KLEIN;

        std::vector<Row> rows;
        for (long long row = 1; row <= max_v; ++row) {
            char* raw = nullptr;
            const long long v = row_vertices(r, row);
            mc_status status = want_sensed
                                   ? mc_sensed_count(census.get(), r, v, &raw)
                                   : mc_rooted_count(census.get(), surface, r, v, &raw);
            if (status != MC_OK) {
                return fail(census.get(), status,
                            (want_sensed ? "sensed v=" : "rooted v=") + std::to_string(v));
            }
            ApiString count(raw);
            rows.push_back({row, count.get()});
        }
        const std::string family = want_sensed
                                       ? "sensed.torus.r" + std::to_string(r)
                                       : "rooted." + surface_name + ".r" + std::to_string(r);
        emit(family, rows, format);
        return store_cache(census.get(), cache_dir);
    }

    if (verify->parsed()) {
        char* raw_report = nullptr;
        int failures = 0;
        mc_status status = mc_verify(census.get(), suite.c_str(), budget_darts, &raw_report,
                                     &failures);
        ApiString report(raw_report);
        if (report) std::cout << report.get();
        if (status == MC_OK) return 0;
        if (status == MC_VERIFY_MISMATCH) {
            std::cerr << "census: " << failures << " comparison(s) failed\n";
            return 1;
        }
        return fail(census.get(), status, "verify");
    }

    if (cache->parsed()) {
        if (cache_action == "store") {
            for (long long row = 1; row <= max_v; ++row) {
                char* raw = nullptr;
                mc_status status = mc_rooted_count(census.get(), MC_SURFACE_TORUS, r,
                                                   row_vertices(r, row), &raw);
                if (status != MC_OK) return fail(census.get(), status, "cache build");
                mc_string_free(raw);
            }
            return store_cache(census.get(), cache_dir);
        }
        mc_status status = mc_cache_load(census.get(), cache_file(cache_dir).c_str());
        if (status != MC_OK) return fail(census.get(), status, "cache load");
        std::cout << "cache ok: " << cache_file(cache_dir) << "\n";
        return 0;
    }

    return 2;
}
