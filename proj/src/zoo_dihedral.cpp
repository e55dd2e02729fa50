#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <string>

namespace cayley {

namespace {

// Elements of <a, b | a^2, b^2> are alternating positive words, stored as
// (length, first letter): letters alternate, so that pair determines the
// word. Letter 0 = a, 1 = b; identity = (0,0).
class DihedralInf final : public GroupOracle {
public:
    DihedralInf()
        : GroupOracle(validate_genset({"a", "b"}, {0, 1}), Element{{0, 0}},
                      {Element{{1, 0}}, Element{{1, 1}}}) {}

    Element multiply(const Element& g, const Element& h) const override {
        long long len1 = g.payload[0], first1 = g.payload[1];
        long long len2 = h.payload[0], first2 = h.payload[1];
        while (len1 > 0 && len2 > 0) {
            long long last1 = (first1 + len1 - 1) % 2;
            if (last1 != first2) break;
            --len1;
            --len2;
            first2 = (first2 + 1) % 2;
        }
        if (len1 == 0 && len2 == 0) return identity();
        if (len1 == 0) return Element{{len2, first2}};
        if (len2 == 0) return Element{{len1, first1}};
        return Element{{len1 + len2, first1}};
    }

    Element inverse(const Element& g) const override {
        long long len = g.payload[0];
        if (len == 0) return identity();
        return Element{{len, (g.payload[1] + len - 1) % 2}};
    }

    bool has_closed_length() const override { return true; }
    std::optional<long long> closed_length(const Element& g) const override {
        return g.payload[0];
    }

    std::string describe() const override { return "D_inf"; }

    std::string format(const Element& g) const override {
        long long len = g.payload[0];
        if (len == 0) return "e";
        std::string s;
        for (long long i = 0; i < len; ++i) {
            s += (g.payload[1] + i) % 2 == 0 ? 'a' : 'b';
        }
        return s;
    }
};

} // namespace

OraclePtr make_dihedral_inf() {
    auto g = std::make_shared<DihedralInf>();
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
