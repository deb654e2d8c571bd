#include "cache.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace mapcensus {

namespace {

constexpr const char* kMagic = "mapcensus-cache";
constexpr const char* kVersion = "1";

uint64_t fnv1a(const std::string& data, uint64_t hash) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::vector<const DegreeTable*> tables_of(const RecurrenceEngine& engine) {
    std::vector<const DegreeTable*> out{&engine.s(), &engine.d(), &engine.t(), &engine.p(),
                                        &engine.b()};
    for (int i = 1; i <= engine.r() - 2; ++i) out.push_back(&engine.q(i));
    if (engine.r() == 4) {
        out.push_back(&engine.qhat2());
        out.push_back(&engine.qhat3());
    }
    return out;
}

DegreeTable* table_by_tag(RecurrenceEngine& engine, const std::string& tag) {
    for (DegreeTable* t : engine.all_tables()) {
        if (t->id().tag() == tag) return t;
    }
    return nullptr;
}

}  // namespace

void cache_store(const CensusContext& ctx, const std::string& path) {
    std::ostringstream body;
    std::string params;
    for (const auto& [r, engine] : ctx.engines()) {
        if (engine.built() < 0) continue;
        if (!params.empty()) params += ",";
        params += "r" + std::to_string(r) + ":" + std::to_string(engine.built());
        for (const DegreeTable* table : tables_of(engine)) {
            const std::string tag = table->id().tag();
            for (int n = 0; n <= engine.built(); ++n) {
                for (int d = 0; d <= 2 * n; ++d) {
                    const BigCount& c = table->cell(n, d);
                    if (c == 0) continue;
                    body << tag << "\t" << n << "\t" << d << "\t" << c.str() << "\n";
                }
            }
        }
    }
    if (params.empty()) throw CacheError("cache_store: no built tables to store");

    const std::string data = body.str();
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw CacheError("cache_store: cannot open " + path);
    out << kMagic << "\t" << kVersion << "\t" << params << "\n";
    out << data;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(data, 1469598103934665603ULL)));
    out << "checksum\t" << hex << "\n";
    if (!out.good()) throw CacheError("cache_store: write failure on " + path);
}

void cache_load(CensusContext& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cache_load: cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) throw CacheError("cache_load: empty file");
    std::istringstream hs(header);
    std::string magic, version, params;
    hs >> magic >> version >> params;
    if (magic != kMagic) throw CacheError("cache_load: not a cache file");
    if (version != kVersion) {
        throw CacheError("cache_load: format version mismatch (have " + version + ", want " +
                         kVersion + ")");
    }

    std::map<int, int> n_max_by_r;
    {
        std::istringstream ps(params);
        std::string item;
        while (std::getline(ps, item, ',')) {
            const auto colon = item.find(':');
            if (item.size() < 3 || item[0] != 'r' || colon == std::string::npos) {
                throw CacheError("cache_load: bad engine parameter " + item);
            }
            n_max_by_r[std::stoi(item.substr(1, colon - 1))] = std::stoi(item.substr(colon + 1));
        }
    }
    if (n_max_by_r.empty()) throw CacheError("cache_load: no engine parameters");

    std::map<int, RecurrenceEngine> staged;
    for (const auto& [r, n_max] : n_max_by_r) {
        auto it = staged.emplace(r, RecurrenceEngine(r)).first;
        for (DegreeTable* t : it->second.all_tables()) t->resize_rows(n_max);
    }

    struct LoadedCell {
        int r;
        std::string tag;
        int n, d;
        BigCount value;
    };
    std::vector<LoadedCell> small_cells;

    uint64_t hash = 1469598103934665603ULL;
    std::string line;
    bool checksum_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("checksum\t", 0) == 0) {
            char hex[17];
            std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
            if (line.substr(9) != hex) throw CacheError("cache_load: checksum failure");
            checksum_seen = true;
            continue;
        }
        if (checksum_seen) throw CacheError("cache_load: data after checksum");
        hash = fnv1a(line + "\n", hash);

        std::istringstream ls(line);
        std::string tag;
        long long n, d;
        std::string value;
        if (!(ls >> tag >> n >> d >> value)) {
            throw CacheError("cache_load: malformed record: " + line);
        }
        const auto rpos = tag.rfind(".r");
        if (rpos == std::string::npos) throw CacheError("cache_load: bad family tag " + tag);
        const int r = std::stoi(tag.substr(rpos + 2));
        auto eng = staged.find(r);
        if (eng == staged.end()) throw CacheError("cache_load: record for undeclared r" +
                                                  std::to_string(r));
        DegreeTable* table = table_by_tag(eng->second, tag);
        if (table == nullptr) throw CacheError("cache_load: unknown family tag " + tag);
        if (n < 0 || n > n_max_by_r.at(r) || d < 0 || d > 2 * n) {
            throw CacheError("cache_load: cell out of range: " + line);
        }
        BigCount parsed(value);
        if (parsed < 0) throw CacheError("cache_load: negative count: " + line);
        if (n <= 12) small_cells.push_back({r, tag, static_cast<int>(n), static_cast<int>(d),
                                            parsed});
        table->mutable_row(static_cast<int>(n))[static_cast<size_t>(d)] = std::move(parsed);
    }
    if (!checksum_seen) throw CacheError("cache_load: missing checksum line");

    // Spot-check: three random small cells recomputed from scratch.
    if (!small_cells.empty()) {
        std::mt19937_64 rng(hash);
        std::map<int, RecurrenceEngine> fresh;
        for (int pick = 0; pick < 3; ++pick) {
            const LoadedCell& cell =
                small_cells[std::uniform_int_distribution<size_t>(0, small_cells.size() - 1)(rng)];
            auto it = fresh.find(cell.r);
            if (it == fresh.end()) it = fresh.emplace(cell.r, RecurrenceEngine(cell.r)).first;
            it->second.require(cell.n);
            const DegreeTable* ref = table_by_tag(it->second, cell.tag);
            if (ref == nullptr || ref->cell(cell.n, cell.d) != cell.value) {
                throw CacheError("cache_load: spot-check mismatch at " + cell.tag + "(" +
                                 std::to_string(cell.n) + "," + std::to_string(cell.d) + ")");
            }
        }
    }

    for (auto& [r, engine] : staged) {
        engine.adopt_rows(n_max_by_r.at(r));
        ctx.install_engine(r, std::move(engine));
    }
}

}  // namespace mapcensus
