#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"
#include "zoo_detail.hpp"

#include <set>
#include <string>

namespace cayley {

namespace {

// Normal form of G * F_n: alternating nontrivial syllables, each either a
// base-group element or a reduced free word. Payload stream:
//   [tag, len, data...]*  with tag 0 = G-syllable, 1 = free syllable.
struct Syllable {
    int tag; // 0 = base group, 1 = free
    std::vector<Coord> data;
};

class FreeProductFree final : public GroupOracle {
public:
    FreeProductFree(OraclePtr base, int rank, GeneratorSet gs, std::vector<Element> gens)
        : GroupOracle(std::move(gs), Element{}, std::move(gens)),
          base_(std::move(base)),
          rank_(rank),
          free_labels_(free_letter_labels(rank)) {}

    static std::vector<std::string> free_letter_labels(int rank) {
        std::vector<std::string> out;
        if (rank <= 3) {
            const char* names[] = {"u", "v", "w"};
            for (int i = 0; i < rank; ++i) out.emplace_back(names[i]);
        } else {
            for (int i = 0; i < rank; ++i) out.push_back("u" + std::to_string(i + 1));
        }
        return out;
    }

    static Element encode(const std::vector<Syllable>& sylls) {
        std::vector<Coord> p;
        for (const auto& s : sylls) {
            p.push_back(s.tag);
            p.push_back(static_cast<Coord>(s.data.size()));
            p.insert(p.end(), s.data.begin(), s.data.end());
        }
        return Element{std::move(p)};
    }

    std::vector<Syllable> decode(const Element& g) const {
        std::vector<Syllable> out;
        std::size_t i = 0;
        while (i < g.payload.size()) {
            Syllable s;
            s.tag = static_cast<int>(g.payload[i]);
            auto len = static_cast<std::size_t>(g.payload[i + 1]);
            s.data.assign(g.payload.begin() + i + 2, g.payload.begin() + i + 2 + len);
            i += 2 + len;
            out.push_back(std::move(s));
        }
        return out;
    }

    bool trivial(const Syllable& s) const {
        if (s.tag == 1) return s.data.empty();
        return Element{s.data} == base_->identity();
    }

    Syllable combine(const Syllable& x, const Syllable& y) const {
        if (x.tag == 0) {
            Element m = base_->multiply(Element{x.data}, Element{y.data});
            return Syllable{0, std::move(m.payload)};
        }
        std::vector<Coord> w = x.data;
        detail::append_reduced(w, y.data);
        return Syllable{1, std::move(w)};
    }

    // Stack merge at the junction: same-type neighbors combine; a trivial
    // result drops out and exposes the next junction.
    std::vector<Syllable> concat(std::vector<Syllable> lhs, const std::vector<Syllable>& rhs) const {
        for (const auto& s : rhs) {
            if (trivial(s)) continue;
            if (lhs.empty() || lhs.back().tag != s.tag) {
                lhs.push_back(s);
                continue;
            }
            Syllable merged = combine(lhs.back(), s);
            lhs.pop_back();
            if (!trivial(merged)) lhs.push_back(std::move(merged));
        }
        return lhs;
    }

    Element multiply(const Element& g, const Element& h) const override {
        return encode(concat(decode(g), decode(h)));
    }

    Element inverse(const Element& g) const override {
        auto sylls = decode(g);
        std::vector<Syllable> out;
        for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
            if (it->tag == 0) {
                Element inv = base_->inverse(Element{it->data});
                out.push_back(Syllable{0, std::move(inv.payload)});
            } else {
                std::vector<Coord> w;
                for (auto lt = it->data.rbegin(); lt != it->data.rend(); ++lt) w.push_back(-*lt);
                out.push_back(Syllable{1, std::move(w)});
            }
        }
        return encode(out);
    }

    // Lengths add over syllables: the generating set T ∪ U never mixes
    // syllable types inside one letter.
    bool has_closed_length() const override { return base_->has_closed_length(); }
    std::optional<long long> closed_length(const Element& g) const override {
        if (!base_->has_closed_length()) return std::nullopt;
        long long sum = 0;
        for (const auto& s : decode(g)) {
            if (s.tag == 0) {
                sum += *base_->closed_length(Element{s.data});
            } else {
                sum += static_cast<long long>(s.data.size());
            }
        }
        return sum;
    }

    std::string describe() const override {
        return base_->describe() + " * F_" + std::to_string(rank_);
    }

    std::string format(const Element& g) const override {
        auto sylls = decode(g);
        if (sylls.empty()) return "e";
        std::string out;
        for (std::size_t i = 0; i < sylls.size(); ++i) {
            if (i) out += ' ';
            if (sylls[i].tag == 0) {
                out += base_->format(Element{sylls[i].data});
            } else {
                out += detail::format_letter_word(sylls[i].data, free_labels_);
            }
        }
        return out;
    }

    Element embed_base(const Element& x) const {
        if (x == base_->identity()) return identity();
        return encode({Syllable{0, x.payload}});
    }

private:
    OraclePtr base_;
    int rank_;
    std::vector<std::string> free_labels_;
};

} // namespace

Element free_product_embed(const GroupOracle& product, const Element& base_element) {
    const auto* p = dynamic_cast<const FreeProductFree*>(&product);
    if (!p) throw Error("free_product_embed needs a free-product oracle");
    return p->embed_base(base_element);
}

OraclePtr make_free_product_free(OraclePtr base, int rank) {
    if (!base) throw Error("make_free_product_free: null base");
    if (rank < 1) throw Error("free-product rank must be >= 1");

    auto free_labels = FreeProductFree::free_letter_labels(rank);
    std::set<std::string> used(base->generators().labels.begin(),
                               base->generators().labels.end());
    std::vector<std::string> labels = base->generators().labels;
    for (const auto& l : free_labels) {
        std::string name = l;
        while (used.count(name)) name += '\'';
        labels.push_back(name);
        used.insert(name);
    }
    for (const auto& l : free_labels) {
        std::string name = l;
        while (used.count(name + "^-1")) name += '\'';
        labels.push_back(name + "^-1");
        used.insert(name + "^-1");
    }

    const int nt = base->genset_size();
    std::vector<int> pairing(nt + 2 * rank);
    for (int i = 0; i < nt; ++i) pairing[i] = base->generators().inverse_index(i);
    for (int i = 0; i < rank; ++i) {
        pairing[nt + i] = nt + rank + i;
        pairing[nt + rank + i] = nt + i;
    }

    std::vector<Element> gens;
    for (int i = 0; i < nt; ++i) {
        std::vector<Coord> p{0, static_cast<Coord>(base->generator(i).payload.size())};
        p.insert(p.end(), base->generator(i).payload.begin(), base->generator(i).payload.end());
        gens.push_back(Element{std::move(p)});
    }
    for (int i = 0; i < rank; ++i) gens.push_back(Element{{1, 1, Coord(i + 1)}});
    for (int i = 0; i < rank; ++i) gens.push_back(Element{{1, 1, Coord(-(i + 1))}});

    auto g = std::make_shared<FreeProductFree>(
        std::move(base), rank, validate_genset(std::move(labels), std::move(pairing)),
        std::move(gens));
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
