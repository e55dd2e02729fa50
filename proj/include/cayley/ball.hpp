#pragma once

#include "cayley/element.hpp"
#include "cayley/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cayley {

// Exact word lengths for everything in B_R, built by BFS from the identity.
// Shells are sorted by canonical key, so iteration order is deterministic.
struct BallTable {
    int radius = -1;
    std::unordered_map<Element, int, ElementHash> length_of;
    std::vector<std::vector<Element>> shells;

    std::optional<long long> find(const Element& g) const {
        auto it = length_of.find(g);
        if (it == length_of.end()) return std::nullopt;
        return it->second;
    }

    long long ball_size(int r) const {
        long long n = 0;
        for (int s = 0; s <= r && s < static_cast<int>(shells.size()); ++s) {
            n += static_cast<long long>(shells[s].size());
        }
        return n;
    }
};

struct BuildOptions {
    std::size_t max_elements = 10'000'000;
    // When both are set, build_ball reads/writes a binary table cache at
    // <cache_dir>/ball-<cache_key>-r<R>.tbl. Results are identical either way.
    std::string cache_dir;
    std::string cache_key;
};

// Throws MemoryBudgetExceeded (carrying the last completed radius) when the
// ball outgrows max_elements.
BallTable build_ball(const GroupOracle& g, int radius, const BuildOptions& opt = {});

// Binary cache: header + per-shell sorted (payload, length) records.
void save_ball_table(const BallTable& table, const std::string& path, std::uint64_t key_hash);
std::optional<BallTable> load_ball_table(const std::string& path, std::uint64_t key_hash,
                                         int radius);

std::uint64_t fnv1a64(const std::string& text);

} // namespace cayley
