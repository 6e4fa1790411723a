#include "chainmail/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace chainmail {

Tree prufer_decode(int n, const std::vector<int>& sequence)
{
    if (n < 1)
        throw InputError("trees need at least one vertex");
    if (n == 1) {
        if (!sequence.empty())
            throw InputError("Prüfer sequence of the 1-vertex tree is empty");
        return Tree({1}, {});
    }
    if (static_cast<int>(sequence.size()) != n - 2)
        throw InputError("Prüfer sequence must have length n - 2");
    std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
    for (int v : sequence) {
        if (v < 1 || v > n)
            throw InputError("Prüfer entry out of range");
        ++degree[static_cast<std::size_t>(v)];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : sequence) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--degree[static_cast<std::size_t>(v)] == 1)
            leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    std::vector<int> vertices(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        vertices[static_cast<std::size_t>(v - 1)] = v;
    return Tree(std::move(vertices), std::move(edges));
}

namespace {

std::map<int, std::vector<int>> adjacency(const Tree& T)
{
    std::map<int, std::vector<int>> adj;
    for (int v : T.vertices())
        adj[v];
    for (auto [x, y] : T.edges()) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    return adj;
}

std::vector<int> centers(const Tree& T, const std::map<int, std::vector<int>>& adj)
{
    std::map<int, std::size_t> degree;
    std::vector<int> layer;
    for (const auto& [v, ns] : adj) {
        degree[v] = ns.size();
        if (ns.size() <= 1)
            layer.push_back(v);
    }
    std::size_t remaining = T.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj.at(v))
                if (--degree[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string encode(int v, int parent, const std::map<int, std::vector<int>>& adj)
{
    std::vector<std::string> children;
    for (int w : adj.at(v))
        if (w != parent)
            children.push_back(encode(w, v, adj));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    return out + ")";
}

} // namespace

std::string canonical_form(const Tree& T)
{
    if (T.size() == 0)
        return "";
    auto adj = adjacency(T);
    std::string best;
    for (int c : centers(T, adj)) {
        std::string s = encode(c, c, adj);
        if (best.empty() || s < best)
            best = std::move(s);
    }
    return best;
}

std::vector<Tree> enumerate_trees(int n)
{
    if (n < 1)
        throw InputError("tree enumeration needs n >= 1");
    if (n > 12)
        throw CapacityError("tree enumeration supports n <= 12");
    std::map<std::string, Tree> level{{canonical_form(Tree({1}, {})), Tree({1}, {})}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Tree> next;
        for (const auto& [key, T] : level) {
            for (int v : T.vertices()) {
                auto vertices = T.vertices();
                auto edges = T.edges();
                vertices.push_back(size);
                edges.emplace_back(v, size);
                Tree grown(std::move(vertices), std::move(edges));
                next.emplace(canonical_form(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Tree> out;
    for (auto& [key, T] : level)
        out.push_back(std::move(T));
    return out;
}

Tree random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("trees need at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<int> sequence;
    for (int i = 0; i + 2 < n; ++i)
        sequence.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1);
    return prufer_decode(n, sequence);
}

} // namespace chainmail
