#include "chainmail/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace chainmail {

namespace {

std::vector<int> sorted_unique_vertices(std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InputError("duplicate vertex in graph");
    return vertices;
}

bool has_vertex(const std::vector<int>& sorted, int v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

} // namespace

DirectedGraph::DirectedGraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(sorted_unique_vertices(std::move(vertices))), edges_(std::move(edges))
{
    std::set<Edge> seen;
    for (const auto& [x, y] : edges_) {
        if (x == y)
            throw InputError("self-loop at " + std::to_string(x));
        if (!has_vertex(vertices_, x) || !has_vertex(vertices_, y))
            throw InputError("edge endpoint is not a vertex");
        if (!seen.insert({x, y}).second)
            throw InputError("duplicate edge " + std::to_string(x) + "->" + std::to_string(y));
    }
}

UndirectedGraph::UndirectedGraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(sorted_unique_vertices(std::move(vertices)))
{
    for (auto [x, y] : edges) {
        if (x == y)
            throw InputError("self-loop at " + std::to_string(x));
        if (!has_vertex(vertices_, x) || !has_vertex(vertices_, y))
            throw InputError("edge endpoint is not a vertex");
        edges_.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate undirected edge");
}

std::vector<int> UndirectedGraph::neighbors(int v) const
{
    std::vector<int> out;
    for (auto [x, y] : edges_) {
        if (x == v)
            out.push_back(y);
        else if (y == v)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t UndirectedGraph::degree(int v) const
{
    std::size_t d = 0;
    for (auto [x, y] : edges_)
        d += (x == v || y == v) ? 1 : 0;
    return d;
}

Tree::Tree(std::vector<int> vertices, std::vector<Edge> edges)
    : graph_(std::move(vertices), std::move(edges))
{
    const auto& vs = graph_.vertices();
    if (vs.empty()) {
        if (!graph_.edges().empty())
            throw InputError("tree without vertices cannot have edges");
        return;
    }
    if (graph_.edges().size() + 1 != vs.size())
        throw InputError("a tree needs exactly |V| - 1 edges");
    std::set<int> reached{vs.front()};
    std::queue<int> todo;
    todo.push(vs.front());
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : graph_.neighbors(v))
            if (reached.insert(w).second)
                todo.push(w);
    }
    if (reached.size() != vs.size())
        throw InputError("graph is not connected, so not a tree");
}

std::vector<int> Tree::leaves() const
{
    std::vector<int> out;
    for (int v : vertices())
        if (graph_.degree(v) == 1)
            out.push_back(v);
    return out;
}

DirectedGraph double_directed_string(int n)
{
    if (n < 0)
        throw InputError("L_n needs n >= 0");
    std::vector<int> vertices;
    for (int i = 1; i <= n + 1; ++i)
        vertices.push_back(i);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i + 1, i);
        edges.emplace_back(i, i + 1);
    }
    return DirectedGraph(std::move(vertices), std::move(edges));
}

Tree string_tree(int t)
{
    if (t < 0)
        throw InputError("string length must be >= 0");
    std::vector<int> vertices;
    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i) {
        vertices.push_back(i);
        if (i > 1)
            edges.emplace_back(i - 1, i);
    }
    return Tree(std::move(vertices), std::move(edges));
}

UndirectedGraph path_graph(int n)
{
    if (n < 0)
        throw InputError("path length must be >= 0");
    std::vector<int> vertices;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        vertices.push_back(i);
        if (i > 1)
            edges.emplace_back(i - 1, i);
    }
    return UndirectedGraph(std::move(vertices), std::move(edges));
}

namespace {

// Per-vertex masks of the incoming edges, plus the source index of each edge.
struct EdgeIndex {
    std::map<int, std::size_t> position;
    std::vector<Mask> in_edges;
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;

    explicit EdgeIndex(const DirectedGraph& G)
    {
        if (G.edges().size() > kMaskBits)
            throw CapacityError("more than 64 edges");
        for (std::size_t i = 0; i < G.vertices().size(); ++i)
            position[G.vertices()[i]] = i;
        in_edges.assign(G.vertices().size(), 0);
        for (std::size_t e = 0; e < G.edges().size(); ++e) {
            auto [x, y] = G.edges()[e];
            source.push_back(position.at(x));
            target.push_back(position.at(y));
            in_edges[position.at(y)] |= Mask{1} << e;
        }
    }

    // Would adding edge e to the forest `face` close a cycle or double an
    // in-degree?
    bool can_add(Mask face, std::size_t e) const
    {
        const std::size_t head = target[e];
        if ((face & in_edges[head]) != 0)
            return false;
        std::size_t x = source[e];
        for (std::size_t steps = 0; steps <= in_edges.size(); ++steps) {
            if (x == head)
                return false;
            Mask in = face & in_edges[x];
            if (in == 0)
                return true;
            x = source[static_cast<std::size_t>(std::countr_zero(in))];
        }
        return false;
    }
};

} // namespace

bool is_directed_forest(Mask edge_subset, const DirectedGraph& G)
{
    EdgeIndex idx(G);
    const std::size_t n = G.vertices().size();
    for (Mask in : idx.in_edges)
        if (std::popcount(edge_subset & in) > 1)
            return false;
    // Every vertex has at most one parent; walking parents from any vertex
    // must terminate within n steps.
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t x = start;
        std::size_t steps = 0;
        while (true) {
            Mask in = edge_subset & idx.in_edges[x];
            if (in == 0)
                break;
            x = idx.source[static_cast<std::size_t>(std::countr_zero(in))];
            if (++steps > n)
                return false;
        }
    }
    return true;
}

bool is_directed_forest(const std::vector<std::size_t>& edge_subset, const DirectedGraph& G)
{
    Mask m = 0;
    for (std::size_t e : edge_subset) {
        if (e >= G.edges().size())
            throw InputError("edge index out of range");
        m |= Mask{1} << e;
    }
    return is_directed_forest(m, G);
}

SimplicialComplex delta_complex(const DirectedGraph& G, std::size_t max_edges)
{
    const std::size_t m = G.edges().size();
    if (m > max_edges || m > kMaskBits)
        throw CapacityError("Δ(G) limited to " + std::to_string(std::min(max_edges, kMaskBits)) +
                            " edges, graph has " + std::to_string(m));
    std::vector<int> labels;
    for (std::size_t e = 1; e <= m; ++e)
        labels.push_back(static_cast<int>(e));
    EdgeIndex idx(G);
    auto facets = facets_of_downset(m, [&](Mask face, std::size_t e) { return idx.can_add(face, e); });
    return SimplicialComplex::from_masks(std::move(labels), std::move(facets), true);
}

SimplicialComplex independence_complex(const UndirectedGraph& g)
{
    std::vector<std::vector<int>> nonfaces;
    for (auto [x, y] : g.edges())
        nonfaces.push_back({x, y});
    return SimplicialComplex::from_minimal_nonfaces(g.vertices(), nonfaces);
}

Tree augment(const Tree& T)
{
    if (T.size() == 0)
        return Tree({1, 2}, {{1, 2}});
    std::vector<int> vertices = T.vertices();
    std::vector<Edge> edges = T.edges();
    int next = vertices.back() + 1;
    if (T.size() == 1) {
        int v = vertices.front();
        for (int k = 0; k < 2; ++k) {
            vertices.push_back(next);
            edges.emplace_back(v, next++);
        }
        return Tree(std::move(vertices), std::move(edges));
    }
    for (int leaf : T.leaves()) {
        vertices.push_back(next);
        edges.emplace_back(leaf, next++);
    }
    return Tree(std::move(vertices), std::move(edges));
}

DirectedGraph direct_augmented(const Tree& T)
{
    if (T.size() == 0)
        throw InputError("T̃ needs a nonempty tree");
    Tree hat = augment(T);
    std::vector<Edge> edges;
    for (auto [u, v] : T.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
    }
    // Leaf edges of T̂ join an old vertex to a new label > max old label.
    const int max_old = T.vertices().back();
    std::vector<Edge> leaf_edges;
    for (auto [u, v] : hat.edges()) {
        if (v > max_old)
            leaf_edges.emplace_back(v, u);
        else if (u > max_old)
            leaf_edges.emplace_back(u, v);
    }
    std::sort(leaf_edges.begin(), leaf_edges.end());
    edges.insert(edges.end(), leaf_edges.begin(), leaf_edges.end());
    return DirectedGraph(hat.vertices(), std::move(edges));
}

std::vector<std::vector<int>> leaf_paths(const Tree& T)
{
    auto leaves = T.leaves();
    if (leaves.size() < 2)
        throw InputError("leaf paths need at least two leaves");
    std::map<int, std::vector<int>> adjacency;
    for (auto [x, y] : T.edges()) {
        adjacency[x].push_back(y);
        adjacency[y].push_back(x);
    }
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        std::map<int, int> parent{{leaves[i], leaves[i]}};
        std::queue<int> todo;
        todo.push(leaves[i]);
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop();
            for (int w : adjacency[v])
                if (parent.emplace(w, v).second)
                    todo.push(w);
        }
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            std::vector<int> path;
            for (int v = leaves[j]; v != leaves[i]; v = parent.at(v))
                path.push_back(v);
            path.push_back(leaves[i]);
            std::reverse(path.begin(), path.end());
            out.push_back(std::move(path));
        }
    }
    return out;
}

namespace {

std::string_view trim_view(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<int> ints_of(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw InputError("");
        } catch (const std::exception&) {
            throw InputError("expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

} // namespace

GraphFile parse_graph(std::istream& in)
{
    GraphFile g;
    bool saw_header = false;
    std::set<int> seen;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim_view(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto colon = t.find(':');
        if (colon != std::string_view::npos) {
            auto key = trim_view(t.substr(0, colon));
            auto value = trim_view(t.substr(colon + 1));
            if (key == "directed") {
                if (value != "true" && value != "false")
                    throw InputError("'directed:' must be true or false");
                g.directed = value == "true";
                saw_header = true;
            } else if (key == "vertices") {
                for (int v : ints_of(value))
                    seen.insert(v);
            } else {
                throw InputError("unknown header '" + std::string(key) + "'");
            }
            continue;
        }
        auto e = ints_of(t);
        if (e.size() != 2)
            throw InputError("edge lines need exactly two vertices");
        g.edges.emplace_back(e[0], e[1]);
        seen.insert(e[0]);
        seen.insert(e[1]);
    }
    if (!saw_header)
        throw InputError("missing 'directed:' header");
    g.vertices.assign(seen.begin(), seen.end());
    return g;
}

GraphFile parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

namespace {

std::string graph_text(bool directed, const std::vector<int>& vertices, const std::vector<Edge>& edges)
{
    std::ostringstream out;
    out << "directed: " << (directed ? "true" : "false") << '\n';
    std::set<int> touched;
    for (auto [x, y] : edges) {
        touched.insert(x);
        touched.insert(y);
    }
    if (touched.size() != vertices.size()) {
        out << "vertices:";
        for (int v : vertices)
            out << ' ' << v;
        out << '\n';
    }
    for (auto [x, y] : edges)
        out << x << ' ' << y << '\n';
    return out.str();
}

} // namespace

std::string to_text(const Tree& T)
{
    return graph_text(false, T.vertices(), T.edges());
}

std::string to_text(const DirectedGraph& G)
{
    return graph_text(true, G.vertices(), G.edges());
}

DirectedGraph as_directed(const GraphFile& g)
{
    if (!g.directed)
        throw InputError("expected a directed graph");
    return DirectedGraph(g.vertices, g.edges);
}

UndirectedGraph as_undirected(const GraphFile& g)
{
    if (g.directed)
        throw InputError("expected an undirected graph");
    return UndirectedGraph(g.vertices, g.edges);
}

Tree as_tree(const GraphFile& g)
{
    if (g.directed)
        throw InputError("a tree file must say 'directed: false'");
    return Tree(g.vertices, g.edges);
}

} // namespace chainmail
