#include "cayley/group.hpp"

#include "cayley/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace cayley {

void validate_oracle_genset(const GroupOracle& g) {
    const auto& gs = g.generators();
    // Re-run the structural checks so ad hoc constructions can't skip them.
    validate_genset(gs.labels, gs.inverse_pairing);
    for (int i = 0; i < gs.size(); ++i) {
        if (g.generator(i) == g.identity()) {
            throw ContainsIdentity("generator '" + gs.labels[i] + "' is the identity");
        }
        Element prod = g.multiply(g.generator(i), g.generator(gs.inverse_index(i)));
        if (prod != g.identity()) {
            throw PairingNotInverse("generators '" + gs.labels[i] + "' and '" +
                                    gs.labels[gs.inverse_index(i)] +
                                    "' are paired but not mutually inverse");
        }
    }
}

Element random_word(const GroupOracle& g, int len, std::mt19937_64& rng) {
    Element w = g.identity();
    std::uniform_int_distribution<int> pick(0, g.genset_size() - 1);
    for (int i = 0; i < len; ++i) {
        w = g.apply_generator(w, pick(rng));
    }
    return w;
}

ProbeReport group_axiom_probe(const GroupOracle& g, long long trials, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 6);
    ProbeReport report;
    report.trials = trials;
    auto fail = [&](const std::string& what, const Element& a, const Element& b, const Element& c) {
        std::ostringstream os;
        os << what << " witness: (" << g.format(a) << ", " << g.format(b) << ", "
           << g.format(c) << ") in " << g.describe();
        throw AxiomViolation(os.str());
    };
    for (long long t = 0; t < trials; ++t) {
        Element a = random_word(g, len(rng), rng);
        Element b = random_word(g, len(rng), rng);
        Element c = random_word(g, len(rng), rng);
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
            fail("associativity", a, b, c);
        }
        if (g.multiply(a, g.identity()) != a || g.multiply(g.identity(), a) != a) {
            fail("identity law", a, a, a);
        }
        if (g.multiply(a, g.inverse(a)) != g.identity() ||
            g.multiply(g.inverse(a), a) != g.identity()) {
            fail("inverse law", a, a, a);
        }
        int i = std::uniform_int_distribution<int>(0, g.genset_size() - 1)(rng);
        if (g.apply_generator(a, i) != g.multiply(a, g.generator(i))) {
            fail("apply_generator consistency", a, g.generator(i), a);
        }
        // Canonical-key consistency: recomputing a product must not change bytes.
        Element ab1 = g.multiply(a, b);
        Element ab2 = g.multiply(a, b);
        if (!(ab1 == ab2)) {
            fail("canonical key stability", a, b, ab1);
        }
    }
    return report;
}

bool is_central(const GroupOracle& g, const Element& x) {
    for (int i = 0; i < g.genset_size(); ++i) {
        if (g.multiply(x, g.generator(i)) != g.multiply(g.generator(i), x)) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

Element parse_word(const GroupOracle& g, const std::string& text) {
    const auto& gs = g.generators();
    std::unordered_map<std::string, int> by_label;
    for (int i = 0; i < gs.size(); ++i) by_label[gs.labels[i]] = i;

    auto apply_power = [&](Element acc, int idx, long long power) {
        int use = idx;
        if (power < 0) {
            use = gs.inverse_index(idx);
            power = -power;
        }
        for (long long k = 0; k < power; ++k) acc = g.apply_generator(acc, use);
        return acc;
    };

    Element acc = g.identity();
    for (const auto& tok : split_ws(text)) {
        if (tok == "e") continue; // identity token
        std::string base = tok;
        long long power = 1;
        auto caret = tok.rfind('^');
        if (caret != std::string::npos && caret + 1 < tok.size()) {
            std::string exp = tok.substr(caret + 1);
            bool numeric = !exp.empty() &&
                           std::all_of(exp.begin() + (exp[0] == '-' ? 1 : 0), exp.end(),
                                       [](unsigned char ch) { return std::isdigit(ch); });
            // Only treat the suffix as an exponent if the prefix is a label;
            // labels themselves may contain '^' (e.g. "a^-1" as a label).
            if (numeric && by_label.count(tok.substr(0, caret))) {
                base = tok.substr(0, caret);
                power = std::stoll(exp);
            }
        }
        auto it = by_label.find(base);
        if (it != by_label.end()) {
            acc = apply_power(std::move(acc), it->second, power);
            continue;
        }
        // Fall back to splitting a run of single-character labels: "ab" -> a b.
        bool splittable = power == 1 && !base.empty() &&
                          std::all_of(base.begin(), base.end(), [&](char ch) {
                              return by_label.count(std::string(1, ch)) > 0;
                          });
        if (!splittable) {
            throw ParseError("unknown generator token '" + tok + "' for " + g.describe());
        }
        for (char ch : base) {
            acc = g.apply_generator(acc, by_label.at(std::string(1, ch)));
        }
    }
    return acc;
}

Element parse_element(const GroupOracle& g, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<long long> coords;
        std::istringstream is(text);
        std::string part;
        while (std::getline(is, part, ',')) {
            try {
                coords.push_back(std::stoll(part));
            } catch (const std::exception&) {
                throw ParseError("bad coordinate '" + part + "'");
            }
        }
        auto e = g.from_coords(coords);
        if (!e) {
            throw ParseError(g.describe() + " does not accept coordinate input");
        }
        return *e;
    }
    return parse_word(g, text);
}

} // namespace cayley
