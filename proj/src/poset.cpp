#include "chainmail/poset.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>

namespace chainmail {

Poset::Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& less)
    : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw InputError("duplicate poset element");
    if (elements_.size() > kMaskBits)
        throw CapacityError("posets limited to 64 elements");
    const std::size_t n = elements_.size();
    below_.assign(n, 0);
    for (auto [a, b] : less)
        below_[index_of(b)] |= Mask{1} << index_of(a);
    // Warshall on bit rows: if j < i then everything below j is below i.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (below_[i] & (Mask{1} << j))
                below_[i] |= below_[j];
    for (std::size_t i = 0; i < n; ++i)
        if (below_[i] & (Mask{1} << i))
            throw InputError("order relation has a cycle");
}

std::size_t Poset::index_of(int label) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
    if (it == elements_.end() || *it != label)
        throw InputError("label " + std::to_string(label) + " is not a poset element");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Poset::less(int a, int b) const
{
    return (below_[index_of(b)] & (Mask{1} << index_of(a))) != 0;
}

std::vector<std::pair<int, int>> Poset::relations() const
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < elements_.size(); ++a)
        for (std::size_t b = 0; b < elements_.size(); ++b)
            if (below_[b] & (Mask{1} << a))
                out.emplace_back(elements_[a], elements_[b]);
    return out;
}

std::vector<std::pair<int, int>> Poset::covers() const
{
    std::vector<std::pair<int, int>> out;
    const std::size_t n = elements_.size();
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!(below_[b] & (Mask{1} << a)))
                continue;
            // a is covered by b unless some c has a < c < b.
            bool between = false;
            for (std::size_t c = 0; c < n && !between; ++c)
                between = (below_[b] & (Mask{1} << c)) && (below_[c] & (Mask{1} << a));
            if (!between)
                out.emplace_back(elements_[a], elements_[b]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex order_complex(const Poset& P)
{
    std::vector<std::vector<int>> incomparable;
    const auto& es = P.elements();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!P.comparable(es[i], es[j]))
                incomparable.push_back({es[i], es[j]});
    return SimplicialComplex::from_minimal_nonfaces(es, incomparable);
}

Poset p_poset(int t)
{
    if (t < 1)
        throw InputError("P_t needs t >= 1");
    std::vector<int> elements(static_cast<std::size_t>(2 * t));
    std::iota(elements.begin(), elements.end(), 1);
    std::vector<std::pair<int, int>> less;
    for (int y = 1; y <= 2 * t; ++y)
        for (int x = y + 2; x <= 2 * t; ++x)
            less.emplace_back(y, x);
    return Poset(std::move(elements), less);
}

namespace {

struct OrientationSearch {
    std::size_t n;
    std::vector<Mask> adjacent;             // 1-skeleton
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Mask> below;                // assigned so far: bit a of below[b] means a < b

    bool edge(std::size_t a, std::size_t b) const { return adjacent[a] & (Mask{1} << b); }
    bool lt(std::size_t a, std::size_t b) const { return below[b] & (Mask{1} << a); }

    // Checks every triple that the new relation i < j takes part in.
    bool admissible(std::size_t i, std::size_t j) const
    {
        for (std::size_t k = 0; k < n; ++k) {
            if (lt(k, i) && (!edge(k, j) || lt(j, k)))
                return false;
            if (lt(j, k) && (!edge(i, k) || lt(k, i)))
                return false;
        }
        return true;
    }

    bool search(std::size_t e)
    {
        if (e == edges.size())
            return true;
        auto [u, v] = edges[e];
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            if (!admissible(a, b))
                continue;
            below[b] |= Mask{1} << a;
            if (search(e + 1))
                return true;
            below[b] &= ~(Mask{1} << a);
        }
        return false;
    }
};

} // namespace

std::optional<Poset> exists_realizing_poset(const SimplicialComplex& K, std::size_t max_vertices)
{
    if (K.is_void())
        throw InputError("poset search on the void complex");
    const std::size_t n = K.vertex_count();
    if (n > max_vertices)
        throw CapacityError("poset search limited to " + std::to_string(max_vertices) + " vertices");
    const Mask all = n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
    // Order complexes contain every element as a vertex.
    if (K.used_vertices() != all)
        return std::nullopt;

    OrientationSearch s{n, std::vector<Mask>(n, 0), {}, std::vector<Mask>(n, 0)};
    for (Mask f : K.facets())
        for (std::size_t a = 0; a < n; ++a)
            if (f & (Mask{1} << a))
                s.adjacent[a] |= f & ~(Mask{1} << a);
    std::vector<std::vector<int>> non_edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (s.edge(a, b))
                s.edges.emplace_back(a, b);
            else
                non_edges.push_back({K.vertices()[a], K.vertices()[b]});
        }
    // Order complexes are flag: the clique complex of the 1-skeleton.
    if (SimplicialComplex::from_minimal_nonfaces(K.vertices(), non_edges) != K)
        return std::nullopt;
    if (!s.search(0))
        return std::nullopt;

    std::vector<std::pair<int, int>> less;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            if (s.lt(a, b))
                less.emplace_back(K.vertices()[a], K.vertices()[b]);
    Poset P(K.vertices(), less);
    if (order_complex(P) != K)
        throw InternalError("transitive orientation does not reproduce the complex");
    return P;
}

std::string to_text(const Poset& P)
{
    std::ostringstream out;
    const auto& es = P.elements();
    out << "elements: " << es.size() << '\n';
    bool canonical = true;
    for (std::size_t i = 0; i < es.size(); ++i)
        canonical = canonical && es[i] == static_cast<int>(i + 1);
    if (!canonical) {
        out << "labels:";
        for (int e : es)
            out << ' ' << e;
        out << '\n';
    }
    for (auto [a, b] : P.covers())
        out << a << ' ' << b << '\n';
    return out.str();
}

Poset parse_poset(std::istream& in)
{
    std::optional<std::size_t> count;
    std::optional<std::vector<int>> labels;
    std::vector<std::pair<int, int>> less;
    std::string line;
    auto ints = [](const std::string& s) {
        std::istringstream is(s);
        std::vector<int> out;
        std::string tok;
        while (is >> tok) {
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
    };
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = line.substr(b, colon - b);
            key.erase(key.find_last_not_of(" \t") + 1);
            auto values = ints(line.substr(colon + 1));
            if (key == "elements") {
                if (values.size() != 1 || values[0] < 0)
                    throw InputError("bad 'elements:' header");
                count = static_cast<std::size_t>(values[0]);
            } else if (key == "labels") {
                labels = values;
            } else {
                throw InputError("unknown header '" + key + "'");
            }
            continue;
        }
        auto pair = ints(line);
        if (pair.size() != 2)
            throw InputError("cover lines need exactly two elements");
        less.emplace_back(pair[0], pair[1]);
    }
    if (!count)
        throw InputError("missing 'elements:' header");
    std::vector<int> elements;
    if (labels) {
        if (labels->size() != *count)
            throw InputError("'labels:' length differs from 'elements:'");
        elements = *labels;
    } else {
        elements.resize(*count);
        std::iota(elements.begin(), elements.end(), 1);
    }
    return Poset(std::move(elements), less);
}

Poset parse_poset(const std::string& text)
{
    std::istringstream in(text);
    return parse_poset(in);
}

} // namespace chainmail
