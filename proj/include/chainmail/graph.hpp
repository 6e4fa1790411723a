#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chainmail/complex.hpp"

namespace chainmail {

using Edge = std::pair<int, int>;

/// Directed graph; the edge (x, y) means x -> y. No loops, no repeated edges.
class DirectedGraph {
public:
    DirectedGraph() = default;
    DirectedGraph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    /// Edges in insertion order. Edge i is vertex i+1 of delta_complex().
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
};

/// Simple undirected graph.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    /// Edges with first < second, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> neighbors(int v) const;
    std::size_t degree(int v) const;

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
};

/// A tree: connected with |E| = |V| - 1. The tree with no vertices is
/// allowed and stands for the string on zero vertices.
class Tree {
public:
    Tree() = default;
    Tree(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return graph_.vertices(); }
    const std::vector<Edge>& edges() const { return graph_.edges(); }
    const UndirectedGraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.vertices().size(); }

    std::vector<int> leaves() const;

private:
    UndirectedGraph graph_;
};

/// L_n: vertices 1..n+1 with (i+1 -> i) and (i -> i+1) for i in 1..n, in
/// that order, so (i+1 -> i) is edge 2i-1 and (i -> i+1) is edge 2i.
DirectedGraph double_directed_string(int n);

/// The path 1 - 2 - ... - t (t = 0 gives the empty tree).
Tree string_tree(int t);

/// Path graph 1 - 2 - ... - n.
UndirectedGraph path_graph(int n);

/// In-degree at most one everywhere and no directed cycle. `edge_subset`
/// lists edge indices (0-based) into G.edges().
bool is_directed_forest(const std::vector<std::size_t>& edge_subset, const DirectedGraph& G);

/// Same test with the subset given as a mask over edge indices.
bool is_directed_forest(Mask edge_subset, const DirectedGraph& G);

/// Δ(G): vertices are edge numbers 1..|E|, faces the directed forests.
/// Throws CapacityError past `max_edges` edges.
SimplicialComplex delta_complex(const DirectedGraph& G, std::size_t max_edges = max_graph_edges());

/// I(Γ): faces are the independent vertex sets.
SimplicialComplex independence_complex(const UndirectedGraph& g);

/// T̂: one new leaf hung on every leaf of T. New labels count up from
/// max(label)+1 in increasing order of the leaf they attach to. A single
/// vertex counts as a leaf at both ends (two new leaves); the empty tree
/// becomes the single edge {1, 2}.
Tree augment(const Tree& T);

/// T̃: tree edges doubled, each new leaf edge directed away from the new
/// leaf. Edge order: tree edges in sorted order (u -> v then v -> u), then
/// the leaf edges in order of the new labels. Requires a nonempty tree.
DirectedGraph direct_augmented(const Tree& T);

/// The simple path between every unordered pair of distinct leaves, from the
/// smaller leaf label to the larger, pairs in lexicographic order.
std::vector<std::vector<int>> leaf_paths(const Tree& T);

// Text format: `directed: true|false`, optional `vertices: l_1 .. l_n` for
// isolated vertices, then one edge `u v` per line (u -> v when directed).
struct GraphFile {
    bool directed = false;
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph(const std::string& text);
std::string to_text(const Tree& T);
std::string to_text(const DirectedGraph& G);

DirectedGraph as_directed(const GraphFile& g);
UndirectedGraph as_undirected(const GraphFile& g);
Tree as_tree(const GraphFile& g);

} // namespace chainmail
