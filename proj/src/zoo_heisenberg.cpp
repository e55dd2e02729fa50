#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace cayley {

namespace {

// Mal'cev triples (A,B,C) for a^A b^B c^C, c = [a,b] = a^-1 b^-1 a b.
// In the unitriangular matrix model [[1,x,z],[0,1,y],[0,0,1]] the triple
// corresponds to x=A, y=B, z=AB+C, which gives the product rule below and
// the conjugation shifts a^-1 g a = (A,B,C-B), b^-1 g b = (A,B,C+A).
class Heisenberg final : public GroupOracle {
public:
    Heisenberg()
        : GroupOracle(letters_genset({"a", "b"}), Element{{0, 0, 0}},
                      {Element{{1, 0, 0}}, Element{{0, 1, 0}},
                       Element{{-1, 0, 0}}, Element{{0, -1, 0}}}) {}

    Element multiply(const Element& g, const Element& h) const override {
        const auto& p = g.payload;
        const auto& q = h.payload;
        return Element{{p[0] + q[0], p[1] + q[1], p[2] + q[2] - q[0] * p[1]}};
    }

    Element inverse(const Element& g) const override {
        const auto& p = g.payload;
        return Element{{-p[0], -p[1], -p[2] - p[0] * p[1]}};
    }

    std::string describe() const override { return "Heisenberg"; }

    std::string format(const Element& g) const override {
        return "(" + std::to_string(g.payload[0]) + "," + std::to_string(g.payload[1]) + "," +
               std::to_string(g.payload[2]) + ")";
    }

    std::optional<Element> from_coords(std::span<const long long> coords) const override {
        if (coords.size() != 3) return std::nullopt;
        return Element{{coords[0], coords[1], coords[2]}};
    }
};

long long ceil_div(long long num, long long den) {
    // den > 0 in all call sites
    return num / den + (num % den > 0 ? 1 : 0);
}

// Smallest integer >= 2*sqrt(m), computed exactly: ceil(sqrt(4m)).
long long ceil_two_sqrt(long long m) {
    long long target = 4 * m;
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(target)));
    while (s * s > target) --s;
    while ((s + 1) * (s + 1) <= target) ++s;
    // s = floor(sqrt(target))
    return s * s == target ? s : s + 1;
}

} // namespace

Element heisenberg_triple(long long A, long long B, long long C) {
    return Element{{A, B, C}};
}

std::optional<long long> heisenberg_star_length(long long A, long long B, long long C) {
    if (!(A > B && B > 0 && C > 0)) return std::nullopt;
    const long long split = A * A - A * B;
    std::optional<long long> low, high;
    if (C <= split) low = 2 * ceil_div(C, A) + A + B;
    if (C >= split) high = 2 * ceil_two_sqrt(C + A * B) - A - B;
    if (low && high && *low != *high) {
        throw Error("low/high branches disagree at the C = A^2-AB boundary: (" +
                    std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(C) +
                    ") gives " + std::to_string(*low) + " vs " + std::to_string(*high));
    }
    return low ? low : high;
}

OraclePtr make_heisenberg() {
    auto g = std::make_shared<Heisenberg>();
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
