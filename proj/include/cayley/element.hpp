#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cayley {

using Coord = long long;

// A group element in its group-specific canonical encoding. Two elements are
// equal iff their payloads are equal; every oracle guarantees this, so the
// payload doubles as the canonical key for hashing and caching.
struct Element {
    std::vector<Coord> payload;

    Element() = default;
    explicit Element(std::vector<Coord> p) : payload(std::move(p)) {}

    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;

    std::size_t size() const { return payload.size(); }
};

struct ElementHash {
    std::size_t operator()(const Element& e) const {
        // FNV-1a over the coordinate words.
        std::uint64_t h = 1469598103934665603ull;
        for (Coord c : e.payload) {
            auto u = static_cast<std::uint64_t>(c);
            for (int k = 0; k < 8; ++k) {
                h ^= (u >> (8 * k)) & 0xffu;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace cayley
