#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

// A signed generator, encoded as 2*vertex + (positive ? 1 : 0).
// Integer order on codes is the global literal order: vertices in
// declaration order, inverse sign before positive sign at equal vertex.
using Lit = int;

inline Lit make_lit(int vertex, bool positive) { return 2 * vertex + (positive ? 1 : 0); }
inline int lit_vertex(Lit x) { return x >> 1; }
inline bool lit_positive(Lit x) { return (x & 1) != 0; }
inline Lit lit_inverse(Lit x) { return x ^ 1; }

// Bitmask over literals (bit i set <=> literal with code i is present).
using LitMask = std::uint32_t;
// Bitmask over vertices.
using VertMask = std::uint32_t;

inline LitMask lit_bit(Lit x) { return LitMask(1) << x; }
inline VertMask vert_bit(int v) { return VertMask(1) << v; }

constexpr int kMaxVertices = 12;

// Finite simplicial labelled graph. Vertex declaration order is the
// canonical total order used by every enumeration in the library.
struct DefiningGraph {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<VertMask> adj;              // adj[v] = neighbours of v
    std::vector<std::pair<int, int>> edges; // i < j, sorted

    int n() const { return static_cast<int>(names.size()); }

    int vertex(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) throw DomainError("unknown vertex '" + name + "'");
        return it->second;
    }
    bool has_vertex(const std::string& name) const { return index.count(name) != 0; }
    bool adjacent(int v, int w) const { return (adj[v] >> w) & 1; }

    VertMask link_mask(int v) const { return adj[v]; }
    VertMask star_mask(int v) const { return adj[v] | vert_bit(v); }
    LitMask link_lits(int v) const;
    LitMask star_lits(int v) const;
    LitMask all_lits() const { return (LitMask(1) << (2 * n())) - 1; }

    // Adjacency in the double graph: distinct commuting non-inverse literals.
    bool lits_adjacent(Lit x, Lit y) const {
        int vx = lit_vertex(x), vy = lit_vertex(y);
        return vx != vy && adjacent(vx, vy);
    }
};

// Build a graph from vertex names and edges given by name pairs.
DefiningGraph make_graph(const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges);

// Parse the graph file format: '#' comments and blank lines ignored,
// exactly one "vertices: ..." line, zero or more "edge: a b" lines.
DefiningGraph load_graph(const std::string& text);

std::vector<int> link(const DefiningGraph& g, int v);
std::vector<int> star(const DefiningGraph& g, int v);

// Derived order theory of the graph: domination, equivalence classes,
// principal and maximal vertices.
struct OrderReport {
    std::vector<VertMask> leq;        // leq[v] = { w : lk(v) <= st(w) }
    std::vector<VertMask> strictLink; // strictLink[v] = { w : lk(v) strictly inside lk(w) }
    std::vector<std::vector<int>> classes;     // [v]
    std::vector<std::vector<int>> linkClasses; // [v]_0
    std::vector<std::vector<int>> starClasses; // [v]_*
    VertMask principal = 0;
    VertMask maximal = 0;

    bool is_principal(int v) const { return (principal >> v) & 1; }
    bool is_maximal(int v) const { return (maximal >> v) & 1; }
};

OrderReport order_report(const DefiningGraph& g);

// Connected components of the double graph restricted to literals whose
// vertex lies outside st(m), sorted by least literal code.
std::vector<LitMask> components_outside_star(const DefiningGraph& g, int m);

// Components of the simple graph restricted to V \ st(m).
std::vector<VertMask> vertex_components_outside_star(const DefiningGraph& g, int m);

std::string lit_text(const DefiningGraph& g, Lit x);
std::string lit_mask_text(const DefiningGraph& g, LitMask mask);

} // namespace raag

#endif
