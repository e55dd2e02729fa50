#pragma once

#include "cayley/group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

// ---- word-based groups ------------------------------------------------

/// Free group F_n, standard generators, freely reduced words.
OraclePtr make_free(int rank);

/// Z^n with the standard generating set {±e_i}; length is the L1 norm.
OraclePtr make_abelian(int rank);

// Defining graph of a right-angled Artin group: vertices are generators,
// edges are commuting pairs. Irreflexive, symmetric.
struct RaagGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels; // optional; defaults to a, b, c, ...

    bool adjacent(int u, int v) const;
    void validate() const; // throws ParseError on self-loops / bad indices
};

RaagGraph raag_graph_empty(int vertices);
RaagGraph raag_graph_edge();
RaagGraph raag_graph_path(int vertices);
RaagGraph raag_graph_cycle(int vertices);
RaagGraph raag_graph_random(int vertices, unsigned long long seed);
// One line per edge "u v", 0-indexed; optional "vertices n" line and
// '#' comments.
RaagGraph raag_graph_from_file(const std::string& path);

/// A_Gamma with the standard generating set V(Gamma)^±; elements are stored
/// as geodesic normal forms (shuffle-and-cancel, then lexicographically
/// least commuting shuffle).
OraclePtr make_raag(RaagGraph graph);

/// True iff every vertex in g's support commutes with all other vertices;
/// exact center membership for RAAGs (cross-checked against is_central).
bool raag_is_central(const GroupOracle& raag, const Element& g);

// ---- symmetric groups --------------------------------------------------

enum class SymmetricMode { Pos, Neg };

/// Symm(n) in one-line notation. Pos: S = Symm(n) \ {e, sigma, sigma^-1}
/// (needs n >= 4); Neg: adjacent transpositions plus sigma^±. Lengths come
/// from BFS over the finite group (n <= 8).
OraclePtr make_symmetric(int degree, SymmetricMode mode);

/// Symm(n) with an explicit generating list (one-line images, 0-indexed);
/// closed under inversion automatically. Throws NotGenerating.
OraclePtr make_symmetric_custom(int degree, std::vector<std::vector<int>> perms);

/// Symm(n) with S = G \ {e}: the complete-graph generating set.
OraclePtr make_symmetric_complete(int degree);

/// The basic n-cycle (1 2 ... n) as a one-line element of Symm(n).
Element symmetric_ncycle(int degree);

// ---- nilpotent / virtually abelian -------------------------------------

/// Integer Heisenberg group, generators {a,b}^±. Elements are Mal'cev
/// triples (A,B,C) for a^A b^B c^C with c = [a,b] = a^-1 b^-1 a b;
/// multiplication comes from the unitriangular 3x3 matrix model.
/// Word lengths are BFS ground truth (no closed form is wired in).
OraclePtr make_heisenberg();

Element heisenberg_triple(long long A, long long B, long long C);

/// The closed-form word length for A > B > 0, C > 0:
///   2*ceil(C/A) + A + B          when C <= A^2 - A*B   (low height)
///   2*ceil(2*sqrt(C+A*B)) - A - B when C >= A^2 - A*B   (high height)
/// Returns nullopt outside that region; at the boundary both branches are
/// evaluated and must agree (asserted).
std::optional<long long> heisenberg_star_length(long long A, long long B, long long C);

/// D_inf = <a, b | a^2, b^2>; elements are alternating positive words.
OraclePtr make_dihedral_inf();

/// G = <a,b,t | [a,b], t^-1 a t = ab, t^-1 b t = a^-1, t^6>, i.e.
/// Z^2 x| Z/6 with generating set {a,b,t}^±. Lengths from BFS.
OraclePtr make_z2_rtimes_z6();

/// The order-6 action matrix applied k times to an integer pair.
std::pair<long long, long long> z2z6_twist(int k, long long x, long long y);

// ---- combinations -------------------------------------------------------

/// G1 x G2 with the split generating set S1 (x) S2. Length is |x|+|y|;
/// exposed as a closed form only when both factors have one.
OraclePtr make_product(OraclePtr g1, OraclePtr g2);

/// Pairs factor elements into a product element (and back).
Element product_pair(const GroupOracle& product, const Element& x, const Element& y);
std::pair<Element, Element> product_split(const GroupOracle& product, const Element& g);

/// G * F_n with generating set T ∪ U (U = standard free letters); elements
/// are alternating normal forms of G-syllables and reduced free syllables.
OraclePtr make_free_product_free(OraclePtr g, int rank);

/// Embeds a base-group element as a one-syllable element of G * F_n.
Element free_product_embed(const GroupOracle& product, const Element& base_element);

// ---- generating-set surgery ---------------------------------------------

/// Same group, different generating set. Word metric changes, so the result
/// never exposes a closed length. When check_generates is set, a bounded
/// BFS must reach every original generator (throws NotGenerating otherwise).
OraclePtr with_genset(OraclePtr base, std::vector<Element> gens,
                      std::vector<std::string> labels = {}, bool check_generates = true);

struct VaGensetResult {
    OraclePtr oracle;              // base group regenerated by S
    std::vector<Element> lifts_U;
    std::vector<Element> seed_V;   // {uv in H} ∪ {uvw in H} ∪ T, identity removed
    std::vector<Element> conj_T;   // all <U>-conjugates of seed_V
    std::vector<Element> genset_S; // U ∪ conj_T
};

/// The zero-on-H generating set for a virtually abelian group: H a
/// finite-index normal free abelian subgroup (membership given by in_H),
/// T ⊆ H a symmetric generating set of H, U symmetric lifts of all
/// non-identity quotient elements. Throws OrbitNotFinite / NotNormal /
/// NotGenerating when the construction hypotheses fail.
VaGensetResult va_genset(OraclePtr base, const std::function<bool(const Element&)>& in_H,
                         const std::vector<Element>& subgroup_gens_T, std::vector<Element> lifts_U);

} // namespace cayley
