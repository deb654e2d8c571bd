#include "cache.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mapcensus;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    out << content;
}

}  // namespace

TEST_CASE("cache round trip restores identical tables") {
    const std::string path = temp_path("mapcensus_cache_roundtrip.tsv");
    CensusContext ctx;
    ctx.engine(4).require(12);
    ctx.engine(3).require(9);
    cache_store(ctx, path);

    CensusContext loaded;
    cache_load(loaded, path);
    CHECK(loaded.engine(4).built() == 12);
    CHECK(loaded.engine(3).built() == 9);
    for (int n = 0; n <= 12; ++n) {
        for (int d = 0; d <= 2 * n; ++d) {
            CHECK(loaded.engine(4).t().cell(n, d) == ctx.engine(4).t().cell(n, d));
            CHECK(loaded.engine(4).qhat3().cell(n, d) == ctx.engine(4).qhat3().cell(n, d));
        }
    }
    // A loaded engine keeps extending correctly.
    CHECK(loaded.engine(4).rooted_regular(Surface::Torus, 8) == BigCount("57590271"));
    std::filesystem::remove(path);
}

TEST_CASE("cache load refuses corruption and version drift") {
    const std::string path = temp_path("mapcensus_cache_tamper.tsv");
    CensusContext ctx;
    ctx.engine(4).require(8);
    cache_store(ctx, path);
    const std::string original = slurp(path);

    SUBCASE("corrupted value") {
        std::string bad = original;
        const auto pos = bad.find("\t15\n");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 4, "\t16\n");
        spit(path, bad);
        CensusContext loaded;
        CHECK_THROWS_AS(cache_load(loaded, path), CacheError);
    }

    SUBCASE("version mismatch") {
        std::string bad = original;
        const auto pos = bad.find("\t1\t");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 3, "\t9\t");
        spit(path, bad);
        CensusContext loaded;
        CHECK_THROWS_AS(cache_load(loaded, path), CacheError);
    }

    SUBCASE("truncated file") {
        spit(path, original.substr(0, original.size() / 2));
        CensusContext loaded;
        CHECK_THROWS_AS(cache_load(loaded, path), CacheError);
    }

    std::filesystem::remove(path);
}

TEST_CASE("cache store with nothing built is an error") {
    CensusContext ctx;
    CHECK_THROWS_AS(cache_store(ctx, temp_path("mapcensus_cache_empty.tsv")), CacheError);
}
