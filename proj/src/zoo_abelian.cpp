#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"
#include "zoo_detail.hpp"

#include <cstdlib>
#include <string>

namespace cayley {

namespace {

class FreeAbelian final : public GroupOracle {
public:
    explicit FreeAbelian(int rank, const std::vector<std::string>& pos_labels)
        : GroupOracle(letters_genset(pos_labels), Element{std::vector<Coord>(rank, 0)},
                      make_gens(rank)),
          rank_(rank) {}

    Element multiply(const Element& g, const Element& h) const override {
        Element out = g;
        for (int i = 0; i < rank_; ++i) out.payload[i] += h.payload[i];
        return out;
    }

    Element inverse(const Element& g) const override {
        Element out = g;
        for (auto& c : out.payload) c = -c;
        return out;
    }

    bool has_closed_length() const override { return true; }
    std::optional<long long> closed_length(const Element& g) const override {
        long long sum = 0;
        for (Coord c : g.payload) sum += std::llabs(c);
        return sum;
    }

    std::string describe() const override { return "Z^" + std::to_string(rank_); }

    std::string format(const Element& g) const override {
        std::string out = "(";
        for (int i = 0; i < rank_; ++i) {
            if (i) out += ',';
            out += std::to_string(g.payload[i]);
        }
        return out + ")";
    }

    std::optional<Element> from_coords(std::span<const long long> coords) const override {
        if (static_cast<int>(coords.size()) != rank_) return std::nullopt;
        return Element{std::vector<Coord>(coords.begin(), coords.end())};
    }

private:
    static std::vector<Element> make_gens(int rank) {
        std::vector<Element> gens;
        for (int sign : {+1, -1}) {
            for (int i = 0; i < rank; ++i) {
                std::vector<Coord> v(rank, 0);
                v[i] = sign;
                gens.push_back(Element{std::move(v)});
            }
        }
        return gens;
    }

    int rank_;
};

} // namespace

OraclePtr make_abelian(int rank) {
    if (rank < 1) throw Error("abelian rank must be >= 1");
    auto g = std::make_shared<FreeAbelian>(rank, detail::default_letter_labels(rank));
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
