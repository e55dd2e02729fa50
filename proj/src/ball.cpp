#include "cayley/ball.hpp"

#include "cayley/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace cayley {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string cache_path(const BuildOptions& opt, int radius) {
    return opt.cache_dir + "/ball-" + opt.cache_key + "-r" + std::to_string(radius) + ".tbl";
}

BallTable bfs(const GroupOracle& g, int radius, std::size_t max_elements) {
    BallTable table;
    table.radius = radius;
    table.shells.resize(radius + 1);
    table.length_of.emplace(g.identity(), 0);
    table.shells[0].push_back(g.identity());

    for (int r = 1; r <= radius; ++r) {
        auto& next = table.shells[r];
        for (const Element& x : table.shells[r - 1]) {
            for (int i = 0; i < g.genset_size(); ++i) {
                Element y = g.apply_generator(x, i);
                if (table.length_of.size() >= max_elements &&
                    !table.length_of.count(y)) {
                    throw MemoryBudgetExceeded(
                        "ball of " + g.describe() + " exceeded " +
                            std::to_string(max_elements) + " elements at radius " +
                            std::to_string(r) + " (completed radius " + std::to_string(r - 1) +
                            ")",
                        r - 1);
                }
                if (table.length_of.emplace(y, r).second) {
                    next.push_back(std::move(y));
                }
            }
        }
        std::sort(next.begin(), next.end());
    }
    return table;
}

constexpr std::uint32_t kMagic = 0x4341594cu; // "CAYL"
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool read_pod(std::ifstream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return static_cast<bool>(in);
}

} // namespace

void save_ball_table(const BallTable& table, const std::string& path, std::uint64_t key_hash) {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write ball cache " + tmp);
        write_pod(out, kMagic);
        write_pod(out, kVersion);
        write_pod(out, key_hash);
        write_pod(out, static_cast<std::int32_t>(table.radius));
        write_pod(out, static_cast<std::uint64_t>(table.length_of.size()));
        for (int r = 0; r <= table.radius; ++r) {
            write_pod(out, static_cast<std::uint64_t>(table.shells[r].size()));
            for (const Element& e : table.shells[r]) {
                write_pod(out, static_cast<std::uint32_t>(e.payload.size()));
                for (Coord c : e.payload) write_pod(out, static_cast<std::int64_t>(c));
            }
        }
        if (!out) throw Error("short write on ball cache " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<BallTable> load_ball_table(const std::string& path, std::uint64_t key_hash,
                                         int radius) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::uint32_t magic = 0, version = 0;
    std::uint64_t hash = 0, count = 0;
    std::int32_t r32 = 0;
    if (!read_pod(in, magic) || magic != kMagic) return std::nullopt;
    if (!read_pod(in, version) || version != kVersion) return std::nullopt;
    if (!read_pod(in, hash) || hash != key_hash) return std::nullopt;
    if (!read_pod(in, r32) || r32 != radius) return std::nullopt;
    if (!read_pod(in, count)) return std::nullopt;

    BallTable table;
    table.radius = radius;
    table.shells.resize(radius + 1);
    table.length_of.reserve(count);
    for (int r = 0; r <= radius; ++r) {
        std::uint64_t n = 0;
        if (!read_pod(in, n)) return std::nullopt;
        table.shells[r].reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint32_t len = 0;
            if (!read_pod(in, len)) return std::nullopt;
            std::vector<Coord> payload(len);
            for (auto& c : payload) {
                std::int64_t v = 0;
                if (!read_pod(in, v)) return std::nullopt;
                c = v;
            }
            Element e{std::move(payload)};
            table.length_of.emplace(e, r);
            table.shells[r].push_back(std::move(e));
        }
    }
    if (table.length_of.size() != count) return std::nullopt;
    return table;
}

BallTable build_ball(const GroupOracle& g, int radius, const BuildOptions& opt) {
    if (radius < 0) throw Error("ball radius must be >= 0");
    const bool use_cache = !opt.cache_dir.empty() && !opt.cache_key.empty();
    if (use_cache) {
        auto cached = load_ball_table(cache_path(opt, radius), fnv1a64(opt.cache_key), radius);
        if (cached) return std::move(*cached);
    }
    BallTable table = bfs(g, radius, opt.max_elements);
    if (use_cache) {
        save_ball_table(table, cache_path(opt, radius), fnv1a64(opt.cache_key));
    }
    return table;
}

} // namespace cayley
