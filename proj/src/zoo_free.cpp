#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"
#include "zoo_detail.hpp"

#include <algorithm>

namespace cayley {

namespace detail {

std::vector<std::string> default_letter_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26) {
            labels.emplace_back(1, static_cast<char>('a' + i));
        } else {
            labels.push_back("x" + std::to_string(i + 1));
        }
    }
    return labels;
}

std::string format_letter_word(const std::vector<Coord>& letters,
                               const std::vector<std::string>& labels) {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        Coord l = letters[i];
        out += labels[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
        if (l < 0) out += "^-1";
    }
    return out;
}

void append_reduced(std::vector<Coord>& acc, const std::vector<Coord>& tail) {
    for (Coord l : tail) {
        if (!acc.empty() && acc.back() == -l) {
            acc.pop_back();
        } else {
            acc.push_back(l);
        }
    }
}

} // namespace detail

namespace {

class FreeGroup final : public GroupOracle {
public:
    explicit FreeGroup(int rank, std::vector<std::string> pos_labels)
        : GroupOracle(letters_genset(pos_labels), Element{}, make_gens(rank)),
          rank_(rank),
          pos_labels_(std::move(pos_labels)) {}

    Element multiply(const Element& g, const Element& h) const override {
        Element out = g;
        detail::append_reduced(out.payload, h.payload);
        return out;
    }

    Element inverse(const Element& g) const override {
        Element out;
        out.payload.reserve(g.payload.size());
        for (auto it = g.payload.rbegin(); it != g.payload.rend(); ++it) {
            out.payload.push_back(-*it);
        }
        return out;
    }

    bool has_closed_length() const override { return true; }
    std::optional<long long> closed_length(const Element& g) const override {
        return static_cast<long long>(g.payload.size());
    }

    std::string describe() const override { return "F_" + std::to_string(rank_); }
    std::string format(const Element& g) const override {
        return detail::format_letter_word(g.payload, pos_labels_);
    }

private:
    static std::vector<Element> make_gens(int rank) {
        std::vector<Element> gens;
        for (int i = 0; i < rank; ++i) gens.push_back(Element{{Coord(i + 1)}});
        for (int i = 0; i < rank; ++i) gens.push_back(Element{{Coord(-(i + 1))}});
        return gens;
    }

    int rank_;
    std::vector<std::string> pos_labels_;
};

} // namespace

OraclePtr make_free(int rank) {
    if (rank < 1) throw Error("free group rank must be >= 1");
    auto g = std::make_shared<FreeGroup>(rank, detail::default_letter_labels(rank));
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
