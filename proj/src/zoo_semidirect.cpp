#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <array>
#include <string>

namespace cayley {

namespace {

// Conjugation by t sends a -> ab, b -> a^-1, i.e. the exponent matrix
// M = [[1,-1],[1,0]] acting on (x,y); M has order 6.
struct Twist {
    std::array<std::array<long long, 4>, 6> pow; // row-major 2x2 per power

    Twist() {
        pow[0] = {1, 0, 0, 1};
        const std::array<long long, 4> m = {1, -1, 1, 0};
        for (int k = 1; k < 6; ++k) {
            const auto& p = pow[k - 1];
            pow[k] = {p[0] * m[0] + p[1] * m[2], p[0] * m[1] + p[1] * m[3],
                      p[2] * m[0] + p[3] * m[2], p[2] * m[1] + p[3] * m[3]};
        }
    }

    std::pair<long long, long long> apply(int k, long long x, long long y) const {
        const auto& p = pow[k];
        return {p[0] * x + p[1] * y, p[2] * x + p[3] * y};
    }
};

const Twist& twist() {
    static const Twist t;
    return t;
}

// Elements (x, y, k) stand for a^x b^y t^k with k in Z/6. Multiplication
// moves t^k across the abelian part: t^k a^w t^-k has exponents M^{-k} w.
class Z2RtimesZ6 final : public GroupOracle {
public:
    Z2RtimesZ6()
        : GroupOracle(letters_genset({"a", "b", "t"}), Element{{0, 0, 0}},
                      {Element{{1, 0, 0}}, Element{{0, 1, 0}}, Element{{0, 0, 1}},
                       Element{{-1, 0, 0}}, Element{{0, -1, 0}}, Element{{0, 0, 5}}}) {}

    Element multiply(const Element& g, const Element& h) const override {
        int k = static_cast<int>(g.payload[2]);
        auto [wx, wy] = twist().apply((6 - k) % 6, h.payload[0], h.payload[1]);
        return Element{{g.payload[0] + wx, g.payload[1] + wy, (g.payload[2] + h.payload[2]) % 6}};
    }

    Element inverse(const Element& g) const override {
        int k = static_cast<int>(g.payload[2]);
        auto [vx, vy] = twist().apply(k, g.payload[0], g.payload[1]);
        return Element{{-vx, -vy, (6 - k) % 6}};
    }

    std::string describe() const override { return "Z^2x|Z/6"; }

    std::string format(const Element& g) const override {
        return "(" + std::to_string(g.payload[0]) + "," + std::to_string(g.payload[1]) + ";t^" +
               std::to_string(g.payload[2]) + ")";
    }

    std::optional<Element> from_coords(std::span<const long long> coords) const override {
        if (coords.size() != 3) return std::nullopt;
        long long k = ((coords[2] % 6) + 6) % 6;
        return Element{{coords[0], coords[1], k}};
    }
};

} // namespace

std::pair<long long, long long> z2z6_twist(int k, long long x, long long y) {
    return twist().apply(((k % 6) + 6) % 6, x, y);
}

OraclePtr make_z2_rtimes_z6() {
    auto g = std::make_shared<Z2RtimesZ6>();
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
