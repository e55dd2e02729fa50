#pragma once

#include "cayley/element.hpp"
#include "cayley/genset.hpp"

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cayley {

// A group together with a fixed symmetric generating set. Oracles are
// immutable after construction and shareable across threads; all operations
// are pure functions of their inputs.
//
// Elements are value-semantic canonical payloads (see element.hpp): the
// payload is the canonical key, so Element equality decides group equality.
class GroupOracle {
public:
    virtual ~GroupOracle() = default;

    const GeneratorSet& generators() const { return genset_; }
    int genset_size() const { return genset_.size(); }
    const Element& generator(int i) const { return gen_elements_[i]; }
    const Element& identity() const { return identity_; }

    virtual Element multiply(const Element& g, const Element& h) const = 0;
    virtual Element inverse(const Element& g) const = 0;

    // Right multiplication by generator i; the Cayley graph edge g -- g*s_i.
    virtual Element apply_generator(const Element& g, int i) const {
        return multiply(g, gen_elements_[i]);
    }

    // Exact word length when the group has a usable normal-form length.
    // Contract: either every element gets a value or none does.
    virtual bool has_closed_length() const { return false; }
    virtual std::optional<long long> closed_length(const Element&) const { return std::nullopt; }

    virtual std::string describe() const = 0;
    virtual std::string format(const Element& g) const = 0;

    // Coordinate input for groups with vector-like payloads (abelian,
    // Heisenberg, Z^2 x| Z/6). Others return nullopt.
    virtual std::optional<Element> from_coords(std::span<const long long>) const {
        return std::nullopt;
    }

    Element conjugate(const Element& g, const Element& s) const {
        return multiply(multiply(inverse(s), g), s);
    }

protected:
    GroupOracle(GeneratorSet genset, Element identity, std::vector<Element> gen_elements)
        : genset_(std::move(genset)),
          identity_(std::move(identity)),
          gen_elements_(std::move(gen_elements)) {}

private:
    GeneratorSet genset_;
    Element identity_;
    std::vector<Element> gen_elements_;
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

// Full generating-set validation against the oracle's arithmetic:
// no generator equals the identity (ContainsIdentity) and
// g_i * g_{pair(i)} == e for every i (PairingNotInverse).
// Every zoo factory runs this before returning.
void validate_oracle_genset(const GroupOracle& g);

struct ProbeReport {
    bool pass = true;
    long long trials = 0;
    std::string witness; // empty when pass
};

// Randomized spot check of the group axioms: associativity, identity and
// inverse laws, apply_generator consistency, canonical-key stability.
// Deterministic under seed. Throws AxiomViolation with a witness on failure.
ProbeReport group_axiom_probe(const GroupOracle& g, long long trials, unsigned long long seed);

// g is central iff it commutes with every generator (S generates G).
bool is_central(const GroupOracle& g, const Element& x);

// Random product of `len` generators (not reduced; may represent anything).
Element random_word(const GroupOracle& g, int len, std::mt19937_64& rng);

// Parses a whitespace-separated word in the oracle's generator labels.
// Tokens: "<label>", "<label>^-1", "<label>^k" (integer k, possibly negative).
// A token that is not a label but decomposes into single-character labels is
// split, so "ab" reads as "a b". Throws ParseError.
Element parse_word(const GroupOracle& g, const std::string& text);

// Parses either a word or a comma-separated coordinate tuple, trying
// coordinates first for oracles that accept them.
Element parse_element(const GroupOracle& g, const std::string& text);

} // namespace cayley
