#include "cayley/errors.hpp"
#include "cayley/zoo.hpp"
#include "zoo_detail.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace cayley {

bool RaagGraph::adjacent(int u, int v) const {
    for (const auto& [a, b] : edges) {
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

void RaagGraph::validate() const {
    if (vertices < 1) throw ParseError("RAAG graph needs at least one vertex");
    for (const auto& [a, b] : edges) {
        if (a == b) throw ParseError("RAAG graph has a self-loop at " + std::to_string(a));
        if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
            throw ParseError("RAAG edge index out of range");
        }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != vertices) {
        throw ParseError("RAAG label count does not match vertex count");
    }
}

RaagGraph raag_graph_empty(int vertices) { return RaagGraph{vertices, {}, {}}; }

RaagGraph raag_graph_edge() { return RaagGraph{2, {{0, 1}}, {}}; }

RaagGraph raag_graph_path(int vertices) {
    RaagGraph g{vertices, {}, {}};
    for (int i = 0; i + 1 < vertices; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

RaagGraph raag_graph_cycle(int vertices) {
    RaagGraph g = raag_graph_path(vertices);
    if (vertices > 2) g.edges.emplace_back(vertices - 1, 0);
    return g;
}

RaagGraph raag_graph_random(int vertices, unsigned long long seed) {
    RaagGraph g{vertices, {}, {}};
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) {
            if (coin(rng)) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

RaagGraph raag_graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open RAAG graph file " + path);
    RaagGraph g{0, {}, {}};
    std::string line;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "vertices") {
            if (!(ls >> g.vertices)) throw ParseError("bad vertices line in " + path);
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("bad edge line '" + line + "' in " + path);
        }
        if (!(ls >> v)) throw ParseError("bad edge line '" + line + "' in " + path);
        g.edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    g.vertices = std::max(g.vertices, max_vertex + 1);
    g.validate();
    return g;
}

namespace {

// Letters are ±(v+1); two letters can swap iff their vertices are distinct
// and adjacent in the graph. A pair l, -l cancels across letters whose
// vertices are the same as or adjacent to l's vertex.
class Raag final : public GroupOracle {
public:
    explicit Raag(const RaagGraph& graph, std::vector<std::string> pos_labels)
        : GroupOracle(letters_genset(pos_labels), Element{},
                      make_gens(graph.vertices)),
          pos_labels_(std::move(pos_labels)),
          vertices_(graph.vertices),
          adj_(static_cast<std::size_t>(graph.vertices) * graph.vertices, 0) {
        for (const auto& [a, b] : graph.edges) {
            adj_[static_cast<std::size_t>(a) * vertices_ + b] = 1;
            adj_[static_cast<std::size_t>(b) * vertices_ + a] = 1;
        }
    }

    Element multiply(const Element& g, const Element& h) const override {
        std::vector<Coord> w = g.payload;
        w.insert(w.end(), h.payload.begin(), h.payload.end());
        return Element{normalize(std::move(w))};
    }

    Element inverse(const Element& g) const override {
        std::vector<Coord> w;
        w.reserve(g.payload.size());
        for (auto it = g.payload.rbegin(); it != g.payload.rend(); ++it) w.push_back(-*it);
        return Element{normalize(std::move(w))};
    }

    bool has_closed_length() const override { return true; }
    std::optional<long long> closed_length(const Element& g) const override {
        return static_cast<long long>(g.payload.size());
    }

    std::string describe() const override {
        return "A_Gamma(" + std::to_string(vertices_) + "v)";
    }
    std::string format(const Element& g) const override {
        return detail::format_letter_word(g.payload, pos_labels_);
    }

    bool adjacent(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * vertices_ + v] != 0;
    }
    int vertex_count() const { return vertices_; }

    std::vector<Coord> normalize(std::vector<Coord> w) const {
        reduce(w);
        return lex_min_shuffle(std::move(w));
    }

private:
    static std::vector<Element> make_gens(int n) {
        std::vector<Element> gens;
        for (int i = 0; i < n; ++i) gens.push_back(Element{{Coord(i + 1)}});
        for (int i = 0; i < n; ++i) gens.push_back(Element{{Coord(-(i + 1))}});
        return gens;
    }

    static int vertex_of(Coord l) { return static_cast<int>((l > 0 ? l : -l) - 1); }

    bool commutes_through(Coord mover, Coord other) const {
        int vm = vertex_of(mover), vo = vertex_of(other);
        return vm == vo || adjacent(vm, vo);
    }

    // Deletes l ... -l pairs whose intervening letters all commute with l
    // (same vertex counts: the group elements commute). Runs to a fixpoint,
    // which is geodesic.
    void reduce(std::vector<Coord>& w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            const int n = static_cast<int>(w.size());
            for (int i = 0; i < n && !changed; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (w[j] == -w[i]) {
                        bool clear = true;
                        for (int k = i + 1; k < j; ++k) {
                            if (!commutes_through(w[i], w[k])) { clear = false; break; }
                        }
                        if (clear) {
                            w.erase(w.begin() + j);
                            w.erase(w.begin() + i);
                            changed = true;
                            break;
                        }
                    }
                    if (!commutes_through(w[i], w[j])) break; // w[i] can't see past j
                }
            }
        }
    }

    // Least letter that can be commuted to the front, repeatedly. Letters on
    // the same vertex never swap; equal swaps are no-ops, so this is the
    // canonical representative of the commuting-shuffle class.
    std::vector<Coord> lex_min_shuffle(std::vector<Coord> w) const {
        std::vector<Coord> out;
        out.reserve(w.size());
        auto code = [](Coord l) { return 2 * vertex_of(l) + (l < 0 ? 1 : 0); };
        while (!w.empty()) {
            int best = -1;
            for (int p = 0; p < static_cast<int>(w.size()); ++p) {
                bool movable = true;
                for (int q = 0; q < p; ++q) {
                    int vq = vertex_of(w[q]), vp = vertex_of(w[p]);
                    if (vq == vp || !adjacent(vq, vp)) { movable = false; break; }
                }
                if (movable && (best == -1 || code(w[p]) < code(w[best]))) best = p;
            }
            out.push_back(w[best]);
            w.erase(w.begin() + best);
        }
        return out;
    }

    std::vector<std::string> pos_labels_;
    int vertices_;
    std::vector<char> adj_;
};

} // namespace

OraclePtr make_raag(RaagGraph graph) {
    graph.validate();
    auto labels = graph.labels.empty() ? detail::default_letter_labels(graph.vertices)
                                       : graph.labels;
    auto g = std::make_shared<Raag>(std::move(graph), std::move(labels));
    validate_oracle_genset(*g);
    return g;
}

bool raag_is_central(const GroupOracle& raag, const Element& g) {
    const auto* r = dynamic_cast<const Raag*>(&raag);
    if (!r) throw Error("raag_is_central needs a RAAG oracle");
    for (Coord l : g.payload) {
        int v = static_cast<int>((l > 0 ? l : -l) - 1);
        for (int u = 0; u < r->vertex_count(); ++u) {
            if (u != v && !r->adjacent(u, v)) return false;
        }
    }
    return true;
}

} // namespace cayley
