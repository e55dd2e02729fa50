#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <set>
#include <string>

namespace cayley {

namespace {

// Payload [len1, p1..., p2...]: the first coordinate delimits the factor
// payloads, keeping pair encodings canonical even when factor payload
// lengths vary.
class Product final : public GroupOracle {
public:
    Product(OraclePtr g1, OraclePtr g2, GeneratorSet gs, std::vector<Element> gens)
        : GroupOracle(std::move(gs), encode_static(g1->identity(), g2->identity()),
                      std::move(gens)),
          g1_(std::move(g1)),
          g2_(std::move(g2)) {}

    static Element encode_static(const Element& a, const Element& b) {
        std::vector<Coord> p;
        p.reserve(1 + a.payload.size() + b.payload.size());
        p.push_back(static_cast<Coord>(a.payload.size()));
        p.insert(p.end(), a.payload.begin(), a.payload.end());
        p.insert(p.end(), b.payload.begin(), b.payload.end());
        return Element{std::move(p)};
    }

    std::pair<Element, Element> decode(const Element& g) const {
        auto len1 = static_cast<std::size_t>(g.payload[0]);
        Element a{std::vector<Coord>(g.payload.begin() + 1, g.payload.begin() + 1 + len1)};
        Element b{std::vector<Coord>(g.payload.begin() + 1 + len1, g.payload.end())};
        return {std::move(a), std::move(b)};
    }

    Element multiply(const Element& g, const Element& h) const override {
        auto [a1, b1] = decode(g);
        auto [a2, b2] = decode(h);
        return encode_static(g1_->multiply(a1, a2), g2_->multiply(b1, b2));
    }

    Element inverse(const Element& g) const override {
        auto [a, b] = decode(g);
        return encode_static(g1_->inverse(a), g2_->inverse(b));
    }

    bool has_closed_length() const override {
        return g1_->has_closed_length() && g2_->has_closed_length();
    }
    std::optional<long long> closed_length(const Element& g) const override {
        if (!has_closed_length()) return std::nullopt;
        auto [a, b] = decode(g);
        return *g1_->closed_length(a) + *g2_->closed_length(b);
    }

    std::string describe() const override {
        return g1_->describe() + " x " + g2_->describe();
    }

    std::string format(const Element& g) const override {
        auto [a, b] = decode(g);
        return "(" + g1_->format(a) + " | " + g2_->format(b) + ")";
    }

    const GroupOracle& factor1() const { return *g1_; }
    const GroupOracle& factor2() const { return *g2_; }

private:
    OraclePtr g1_, g2_;
};

} // namespace

Element product_pair(const GroupOracle& product, const Element& x, const Element& y) {
    const auto* p = dynamic_cast<const Product*>(&product);
    if (!p) throw Error("product_pair needs a product oracle");
    return Product::encode_static(x, y);
}

std::pair<Element, Element> product_split(const GroupOracle& product, const Element& g) {
    const auto* p = dynamic_cast<const Product*>(&product);
    if (!p) throw Error("product_split needs a product oracle");
    return p->decode(g);
}

OraclePtr make_product(OraclePtr g1, OraclePtr g2) {
    if (!g1 || !g2) throw Error("make_product: null factor");

    std::set<std::string> used(g1->generators().labels.begin(), g1->generators().labels.end());
    std::vector<std::string> labels = g1->generators().labels;
    for (std::string l : g2->generators().labels) {
        // Disambiguate colliding factor labels with primes: a -> a'.
        std::string base = l;
        auto caret = base.find("^-1");
        std::string suffix;
        if (caret != std::string::npos) {
            suffix = base.substr(caret);
            base.resize(caret);
        }
        while (used.count(base + suffix)) base += '\'';
        labels.push_back(base + suffix);
        used.insert(base + suffix);
    }

    const int n1 = g1->genset_size();
    const int n2 = g2->genset_size();
    std::vector<int> pairing(n1 + n2);
    for (int i = 0; i < n1; ++i) pairing[i] = g1->generators().inverse_index(i);
    for (int i = 0; i < n2; ++i) pairing[n1 + i] = n1 + g2->generators().inverse_index(i);

    std::vector<Element> gens;
    gens.reserve(n1 + n2);
    for (int i = 0; i < n1; ++i) {
        gens.push_back(Product::encode_static(g1->generator(i), g2->identity()));
    }
    for (int i = 0; i < n2; ++i) {
        gens.push_back(Product::encode_static(g1->identity(), g2->generator(i)));
    }

    auto g = std::make_shared<Product>(std::move(g1), std::move(g2),
                                       validate_genset(std::move(labels), std::move(pairing)),
                                       std::move(gens));
    validate_oracle_genset(*g);
    return g;
}

} // namespace cayley
