#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace cayley {

namespace {

constexpr int kMaxDegree = 8;

std::vector<Coord> identity_perm(int n) {
    std::vector<Coord> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<Coord> invert_perm(const std::vector<Coord>& p) {
    std::vector<Coord> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = Coord(i);
    return q;
}

// (g*h)(i) = g(h(i)): h acts first, matching right multiplication by h.
std::vector<Coord> compose(const std::vector<Coord>& g, const std::vector<Coord>& h) {
    std::vector<Coord> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[static_cast<std::size_t>(h[i])];
    return out;
}

std::string perm_label(const std::vector<Coord>& p) {
    std::string s = "p";
    for (Coord c : p) s += static_cast<char>('0' + c);
    return s;
}

class Symmetric final : public GroupOracle {
public:
    Symmetric(int degree, GeneratorSet gs, std::vector<Element> gens, std::string name)
        : GroupOracle(std::move(gs), Element{identity_perm(degree)}, std::move(gens)),
          degree_(degree),
          name_(std::move(name)) {}

    Element multiply(const Element& g, const Element& h) const override {
        return Element{compose(g.payload, h.payload)};
    }

    Element inverse(const Element& g) const override {
        return Element{invert_perm(g.payload)};
    }

    std::string describe() const override { return name_; }

    std::string format(const Element& g) const override {
        std::string s = "[";
        for (int i = 0; i < degree_; ++i) {
            if (i) s += ',';
            s += std::to_string(g.payload[i]);
        }
        return s + "]";
    }

    std::optional<Element> from_coords(std::span<const long long> coords) const override {
        if (static_cast<int>(coords.size()) != degree_) return std::nullopt;
        std::vector<Coord> p(coords.begin(), coords.end());
        std::vector<Coord> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != identity_perm(degree_)) return std::nullopt;
        return Element{std::move(p)};
    }

private:
    int degree_;
    std::string name_;
};

OraclePtr finish(int degree, std::vector<std::vector<Coord>> perm_list,
                 std::vector<std::string> labels, const std::string& name,
                 bool check_generates) {
    std::map<std::vector<Coord>, int> index_of;
    for (std::size_t i = 0; i < perm_list.size(); ++i) index_of[perm_list[i]] = static_cast<int>(i);
    std::vector<int> pairing(perm_list.size());
    for (std::size_t i = 0; i < perm_list.size(); ++i) {
        auto it = index_of.find(invert_perm(perm_list[i]));
        if (it == index_of.end()) throw NotInvolution("generator list not closed under inversion");
        pairing[i] = it->second;
    }
    std::vector<Element> gens;
    gens.reserve(perm_list.size());
    for (auto& p : perm_list) gens.push_back(Element{std::move(p)});

    auto g = std::make_shared<Symmetric>(
        degree, validate_genset(std::move(labels), std::move(pairing)), std::move(gens), name);
    validate_oracle_genset(*g);

    if (check_generates) {
        long long order = 1;
        for (int i = 2; i <= degree; ++i) order *= i;
        std::set<Element> seen{g->identity()};
        std::vector<Element> frontier{g->identity()};
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (const auto& x : frontier) {
                for (int i = 0; i < g->genset_size(); ++i) {
                    Element y = g->apply_generator(x, i);
                    if (seen.insert(y).second) next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
        if (static_cast<long long>(seen.size()) != order) {
            throw NotGenerating(name + ": generating list spans only " +
                                std::to_string(seen.size()) + " of " + std::to_string(order) +
                                " elements");
        }
    }
    return g;
}

} // namespace

Element symmetric_ncycle(int degree) {
    std::vector<Coord> p(degree);
    for (int i = 0; i < degree; ++i) p[i] = (i + 1) % degree;
    return Element{std::move(p)};
}

OraclePtr make_symmetric(int degree, SymmetricMode mode) {
    if (degree < 3 || degree > kMaxDegree) {
        throw Error("symmetric degree must be in [3," + std::to_string(kMaxDegree) + "]");
    }
    const Element sigma = symmetric_ncycle(degree);
    const Element sigma_inv{invert_perm(sigma.payload)};

    if (mode == SymmetricMode::Pos) {
        if (degree < 4) throw Error("pos mode needs degree >= 4");
        std::vector<std::vector<Coord>> perms;
        std::vector<std::string> labels;
        std::vector<Coord> p = identity_perm(degree);
        do {
            if (p == identity_perm(degree) || p == sigma.payload || p == sigma_inv.payload) {
                continue;
            }
            perms.push_back(p);
            labels.push_back(perm_label(p));
        } while (std::next_permutation(p.begin(), p.end()));
        return finish(degree, std::move(perms), std::move(labels),
                      "Symm(" + std::to_string(degree) + ") S_pos", false);
    }

    std::vector<std::vector<Coord>> perms;
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < degree; ++i) {
        std::vector<Coord> t = identity_perm(degree);
        std::swap(t[i], t[i + 1]);
        perms.push_back(std::move(t));
        labels.push_back("t" + std::to_string(i + 1));
    }
    perms.push_back(sigma.payload);
    labels.push_back("s");
    perms.push_back(sigma_inv.payload);
    labels.push_back("s^-1");
    return finish(degree, std::move(perms), std::move(labels),
                  "Symm(" + std::to_string(degree) + ") S_neg", false);
}

OraclePtr make_symmetric_custom(int degree, std::vector<std::vector<int>> raw) {
    if (degree < 2 || degree > kMaxDegree) {
        throw Error("symmetric degree must be in [2," + std::to_string(kMaxDegree) + "]");
    }
    std::set<std::vector<Coord>> uniq;
    for (const auto& p : raw) {
        if (static_cast<int>(p.size()) != degree) throw ParseError("permutation arity mismatch");
        std::vector<Coord> q(p.begin(), p.end());
        std::vector<Coord> sorted = q;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != identity_perm(degree)) throw ParseError("not a permutation of 0..n-1");
        uniq.insert(q);
        uniq.insert(invert_perm(q));
    }
    std::vector<std::vector<Coord>> perms(uniq.begin(), uniq.end());
    std::vector<std::string> labels;
    for (const auto& p : perms) labels.push_back(perm_label(p));
    return finish(degree, std::move(perms), std::move(labels),
                  "Symm(" + std::to_string(degree) + ") custom", true);
}

OraclePtr make_symmetric_complete(int degree) {
    if (degree < 2 || degree > kMaxDegree) {
        throw Error("symmetric degree must be in [2," + std::to_string(kMaxDegree) + "]");
    }
    std::vector<std::vector<Coord>> perms;
    std::vector<std::string> labels;
    std::vector<Coord> p = identity_perm(degree);
    while (std::next_permutation(p.begin(), p.end())) {
        perms.push_back(p);
        labels.push_back(perm_label(p));
    }
    return finish(degree, std::move(perms), std::move(labels),
                  "Symm(" + std::to_string(degree) + ") complete", false);
}

} // namespace cayley
