#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cayley {

namespace {

class CustomGenset final : public GroupOracle {
public:
    CustomGenset(OraclePtr base, GeneratorSet gs, std::vector<Element> gens)
        : GroupOracle(std::move(gs), base->identity(), std::move(gens)), base_(std::move(base)) {}

    Element multiply(const Element& g, const Element& h) const override {
        return base_->multiply(g, h);
    }
    Element inverse(const Element& g) const override { return base_->inverse(g); }

    // Different generating set means a different word metric: never reuse
    // the base group's closed form.
    std::string describe() const override { return base_->describe() + " (custom S)"; }
    std::string format(const Element& g) const override { return base_->format(g); }
    std::optional<Element> from_coords(std::span<const long long> c) const override {
        return base_->from_coords(c);
    }

    const GroupOracle& base() const { return *base_; }

private:
    OraclePtr base_;
};

} // namespace

OraclePtr with_genset(OraclePtr base, std::vector<Element> gens,
                      std::vector<std::string> labels, bool check_generates) {
    if (!base) throw Error("with_genset: null base");
    if (gens.empty()) throw EmptyGenset("with_genset: empty generating list");

    // Dedupe while preserving order.
    {
        std::vector<Element> uniq;
        std::unordered_set<Element, ElementHash> seen;
        std::vector<std::string> uniq_labels;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (seen.insert(gens[i]).second) {
                uniq.push_back(gens[i]);
                if (!labels.empty()) uniq_labels.push_back(labels[i]);
            }
        }
        gens = std::move(uniq);
        labels = std::move(uniq_labels);
    }

    if (labels.empty()) {
        std::set<std::string> used;
        for (const auto& g : gens) {
            std::string name = base->format(g);
            while (used.count(name)) name += '\'';
            used.insert(name);
            labels.push_back(name);
        }
    }

    std::unordered_map<Element, int, ElementHash> index_of;
    for (std::size_t i = 0; i < gens.size(); ++i) index_of[gens[i]] = static_cast<int>(i);
    std::vector<int> pairing(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto it = index_of.find(base->inverse(gens[i]));
        if (it == index_of.end()) {
            throw NotInvolution("with_genset: list not closed under inversion (" +
                                base->format(gens[i]) + ")");
        }
        pairing[i] = it->second;
    }

    auto g = std::make_shared<CustomGenset>(
        base, validate_genset(std::move(labels), std::move(pairing)), gens);
    validate_oracle_genset(*g);

    if (check_generates) {
        // Bounded BFS in the new generators must reach every old generator.
        std::unordered_set<Element, ElementHash> missing;
        for (int i = 0; i < base->genset_size(); ++i) missing.insert(base->generator(i));
        std::unordered_set<Element, ElementHash> seen{g->identity()};
        missing.erase(g->identity());
        std::vector<Element> frontier{g->identity()};
        constexpr int kRadiusCap = 8;
        constexpr std::size_t kElementCap = 500000;
        for (int r = 0; r < kRadiusCap && !missing.empty() && !frontier.empty(); ++r) {
            std::vector<Element> next;
            for (const auto& x : frontier) {
                for (int i = 0; i < g->genset_size(); ++i) {
                    Element y = g->apply_generator(x, i);
                    if (seen.size() >= kElementCap) break;
                    if (seen.insert(y).second) {
                        missing.erase(y);
                        next.push_back(std::move(y));
                    }
                }
            }
            frontier = std::move(next);
        }
        if (!missing.empty()) {
            throw NotGenerating("with_genset: " + std::to_string(missing.size()) +
                                " base generator(s) unreachable within radius " +
                                std::to_string(kRadiusCap));
        }
    }
    return g;
}

VaGensetResult va_genset(OraclePtr base, const std::function<bool(const Element&)>& in_H,
                         const std::vector<Element>& subgroup_gens_T, std::vector<Element> lifts_U) {
    if (!base) throw Error("va_genset: null base");
    auto key_set = [](const std::vector<Element>& v) {
        return std::unordered_set<Element, ElementHash>(v.begin(), v.end());
    };

    auto uset = key_set(lifts_U);
    for (const auto& u : lifts_U) {
        if (in_H(u)) throw Error("va_genset: lift " + base->format(u) + " lies in H");
        if (u == base->identity()) throw ContainsIdentity("va_genset: identity among lifts");
        if (!uset.count(base->inverse(u))) {
            throw NotInvolution("va_genset: lift set not closed under inversion");
        }
    }
    auto tset = key_set(subgroup_gens_T);
    for (const auto& t : subgroup_gens_T) {
        if (!in_H(t)) throw Error("va_genset: T element " + base->format(t) + " outside H");
        if (!tset.count(base->inverse(t))) {
            throw NotInvolution("va_genset: T not closed under inversion");
        }
    }

    // V = {uv in H} ∪ {uvw in H} ∪ T, identity filtered out (e may not
    // occur in a generating set and adds nothing).
    std::vector<Element> seed;
    std::unordered_set<Element, ElementHash> seen;
    auto push_seed = [&](const Element& x) {
        if (x == base->identity()) return;
        if (seen.insert(x).second) seed.push_back(x);
    };
    for (const auto& t : subgroup_gens_T) push_seed(t);
    for (const auto& u : lifts_U) {
        for (const auto& v : lifts_U) {
            Element uv = base->multiply(u, v);
            if (in_H(uv)) push_seed(uv);
            for (const auto& w : lifts_U) {
                Element uvw = base->multiply(uv, w);
                if (in_H(uvw)) push_seed(uvw);
            }
        }
    }

    // T' = all <U>-conjugates of V: close under conjugation by each lift.
    // Conjugation by U on H factors through the finite quotient, so the
    // closure is finite whenever the hypotheses hold.
    constexpr std::size_t kOrbitCap = 100000;
    std::vector<Element> conj = seed;
    std::unordered_set<Element, ElementHash> conj_seen(seed.begin(), seed.end());
    for (std::size_t head = 0; head < conj.size(); ++head) {
        Element current = conj[head];
        for (const auto& u : lifts_U) {
            Element c = base->conjugate(current, u);
            if (!in_H(c)) {
                throw NotNormal("va_genset: conjugate " + base->format(c) + " left H");
            }
            if (conj_seen.insert(c).second) {
                conj.push_back(std::move(c));
                if (conj.size() > kOrbitCap) {
                    throw OrbitNotFinite("va_genset: conjugation closure exceeded " +
                                         std::to_string(kOrbitCap) + " elements");
                }
            }
        }
    }
    std::sort(conj.begin(), conj.end());

    std::vector<Element> genset = lifts_U;
    auto sset = key_set(lifts_U);
    for (const auto& c : conj) {
        if (sset.insert(c).second) genset.push_back(c);
    }
    if (genset.empty()) throw EmptyGenset("va_genset: empty result");

    VaGensetResult result;
    result.lifts_U = std::move(lifts_U);
    result.seed_V = std::move(seed);
    result.conj_T = std::move(conj);
    result.genset_S = genset;
    result.oracle = with_genset(std::move(base), std::move(genset), {}, true);
    return result;
}

} // namespace cayley
