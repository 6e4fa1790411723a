#include "chainmail/complex.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>

namespace chainmail {

namespace {

std::vector<int> normalized_vertices(std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InputError("duplicate vertex label");
    if (vertices.size() > kMaskBits)
        throw CapacityError("complex has more than 64 vertices");
    return vertices;
}

Mask full_mask(std::size_t n)
{
    return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

Mask mask_from_labels(const std::vector<int>& sorted_vertices, const std::vector<int>& labels)
{
    Mask m = 0;
    for (int label : labels) {
        auto it = std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), label);
        if (it == sorted_vertices.end() || *it != label)
            throw InputError("label " + std::to_string(label) + " is not a vertex");
        m |= Mask{1} << static_cast<std::size_t>(it - sorted_vertices.begin());
    }
    return m;
}

} // namespace

std::vector<Mask> maximal_masks(std::vector<Mask> masks)
{
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<Mask> kept;
    kept.reserve(masks.size());
    for (Mask m : masks)
        if (!kernels::any_superset(kept, m))
            kept.push_back(m);
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<int> vertices, std::vector<Mask> facets,
                                                bool empty_if_no_facets)
{
    vertices = normalized_vertices(std::move(vertices));
    const Mask all = full_mask(vertices.size());
    for (Mask f : facets)
        if ((f & ~all) != 0)
            throw InputError("facet mask outside the vertex set");
    if (facets.empty() && empty_if_no_facets)
        facets.push_back(0);
    return SimplicialComplex(std::move(vertices), maximal_masks(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertices,
                                                 const std::vector<std::vector<int>>& facets,
                                                 bool empty_if_no_facets)
{
    vertices = normalized_vertices(std::move(vertices));
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("facet repeats a vertex");
        masks.push_back(mask_from_labels(vertices, f));
    }
    return from_masks(std::move(vertices), std::move(masks), empty_if_no_facets);
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(std::vector<int> vertices,
                                                           const std::vector<std::vector<int>>& nonfaces)
{
    vertices = normalized_vertices(std::move(vertices));
    std::vector<Mask> blocked;
    blocked.reserve(nonfaces.size());
    for (const auto& nf : nonfaces)
        blocked.push_back(mask_from_labels(vertices, nf));
    if (std::find(blocked.begin(), blocked.end(), Mask{0}) != blocked.end())
        return SimplicialComplex(std::move(vertices), {});

    // Nonfaces touching vertex v, with v removed: adding v to a face is legal
    // iff none of these is already inside the face.
    const std::size_t n = vertices.size();
    std::vector<std::vector<Mask>> rest(n);
    for (Mask nf : blocked)
        for (std::size_t v = 0; v < n; ++v)
            if (nf & (Mask{1} << v))
                rest[v].push_back(nf & ~(Mask{1} << v));

    auto facets = facets_of_downset(n, [&](Mask face, std::size_t v) {
        for (Mask r : rest[v])
            if ((r & ~face) == 0)
                return false;
        return true;
    });
    return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> vertices)
{
    return SimplicialComplex(normalized_vertices(std::move(vertices)), {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<int> vertices)
{
    return SimplicialComplex(normalized_vertices(std::move(vertices)), {Mask{0}});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<int> vertices)
{
    vertices = normalized_vertices(std::move(vertices));
    Mask all = full_mask(vertices.size());
    return SimplicialComplex(std::move(vertices), {all});
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const
{
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (Mask f : facets_)
        out.push_back(labels_of(f));
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::dimension() const
{
    if (is_void())
        throw InputError("the void complex has no dimension");
    int best = 0;
    for (Mask f : facets_)
        best = std::max(best, std::popcount(f));
    return best - 1;
}

bool SimplicialComplex::contains(Mask face) const
{
    return kernels::any_superset(facets_, face);
}

bool SimplicialComplex::contains(const std::vector<int>& face) const
{
    return contains(mask_from_labels(vertices_, face));
}

Mask SimplicialComplex::used_vertices() const
{
    return kernels::or_reduce(facets_);
}

std::size_t SimplicialComplex::index_of(int label) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        throw InputError("label " + std::to_string(label) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
}

Mask SimplicialComplex::mask_of(const std::vector<int>& labels) const
{
    return mask_from_labels(vertices_, labels);
}

std::vector<int> SimplicialComplex::labels_of(Mask face) const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(face)));
    while (face != 0) {
        int bit = std::countr_zero(face);
        out.push_back(vertices_[static_cast<std::size_t>(bit)]);
        face &= face - 1;
    }
    return out;
}

SimplicialComplex SimplicialComplex::relabel(const VertexMap& mapping) const
{
    std::vector<int> image;
    image.reserve(vertices_.size());
    for (int v : vertices_) {
        auto it = mapping.find(v);
        if (it == mapping.end())
            throw InputError("relabeling misses vertex " + std::to_string(v));
        image.push_back(it->second);
    }
    std::vector<std::vector<int>> facets;
    facets.reserve(facets_.size());
    for (Mask f : facets_) {
        std::vector<int> mapped;
        for (int v : labels_of(f))
            mapped.push_back(mapping.at(v));
        facets.push_back(std::move(mapped));
    }
    return from_facets(std::move(image), facets);
}

std::vector<std::vector<Mask>> faces_by_dimension(const SimplicialComplex& K)
{
    if (K.is_void())
        return {};
    const std::size_t top = static_cast<std::size_t>(K.dimension() + 1);
    // levels[s] holds the faces with s vertices.
    std::vector<std::vector<Mask>> levels(top + 1);
    for (Mask f : K.facets())
        levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (std::size_t s = top; s >= 1; --s) {
        auto& level = levels[s];
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        auto& below = levels[s - 1];
        below.reserve(below.size() + level.size() * s);
        for (Mask f : level) {
            Mask rest = f;
            while (rest != 0) {
                Mask bit = rest & (~rest + 1);
                below.push_back(f & ~bit);
                rest &= rest - 1;
            }
        }
    }
    auto& bottom = levels[0];
    bottom.assign(1, Mask{0});
    for (auto& level : levels)
        std::sort(level.begin(), level.end(), lex_less);
    return levels;
}

std::vector<std::vector<int>> faces(const SimplicialComplex& K, int d)
{
    std::vector<std::vector<int>> out;
    if (d < -1)
        return out;
    auto levels = faces_by_dimension(K);
    const auto idx = static_cast<std::size_t>(d + 1);
    if (idx >= levels.size())
        return out;
    for (Mask f : levels[idx])
        out.push_back(K.labels_of(f));
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& K)
{
    if (K.is_void())
        return {0};
    std::vector<std::size_t> f;
    for (const auto& level : faces_by_dimension(K))
        f.push_back(level.size());
    return f;
}

long long euler_characteristic(const SimplicialComplex& K)
{
    auto f = f_vector(K);
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        chi += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(f[i]);
    return chi;
}

long long reduced_euler_characteristic(const SimplicialComplex& K)
{
    auto f = f_vector(K);
    return euler_characteristic(K) - static_cast<long long>(f[0]);
}

std::optional<int> is_cone(const SimplicialComplex& K)
{
    if (K.is_void())
        throw InputError("cone test on the void complex");
    Mask common = kernels::and_reduce(K.facets());
    if (common == 0)
        return std::nullopt;
    return K.vertices()[static_cast<std::size_t>(std::countr_zero(common))];
}

namespace {

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::size_t n;
    std::vector<std::size_t> order;                 // a-vertices in assignment order
    std::vector<std::vector<std::size_t>> options;  // candidate b-vertices per a-vertex
    std::vector<int> image;                         // a index -> b index, -1 unassigned
    std::vector<bool> taken;

    Mask map_mask(Mask m) const
    {
        Mask out = 0;
        while (m != 0) {
            auto v = static_cast<std::size_t>(std::countr_zero(m));
            out |= Mask{1} << static_cast<std::size_t>(image[v]);
            m &= m - 1;
        }
        return out;
    }

    // Facets restricted to the assigned vertices must agree as multisets.
    bool consistent(Mask assigned_a, Mask assigned_b) const
    {
        std::vector<Mask> lhs, rhs;
        lhs.reserve(a.facets().size());
        rhs.reserve(b.facets().size());
        for (Mask f : a.facets())
            lhs.push_back(map_mask(f & assigned_a));
        for (Mask g : b.facets())
            rhs.push_back(g & assigned_b);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        return lhs == rhs;
    }

    bool search(std::size_t depth, Mask assigned_a, Mask assigned_b)
    {
        if (depth == n)
            return true;
        std::size_t v = order[depth];
        for (std::size_t w : options[v]) {
            if (taken[w])
                continue;
            image[v] = static_cast<int>(w);
            taken[w] = true;
            Mask na = assigned_a | (Mask{1} << v);
            Mask nb = assigned_b | (Mask{1} << w);
            if (consistent(na, nb) && search(depth + 1, na, nb))
                return true;
            taken[w] = false;
            image[v] = -1;
        }
        return false;
    }
};

std::vector<std::vector<int>> vertex_signatures(const SimplicialComplex& K)
{
    std::vector<std::vector<int>> sig(K.vertex_count());
    for (Mask f : K.facets()) {
        Mask rest = f;
        while (rest != 0) {
            sig[static_cast<std::size_t>(std::countr_zero(rest))].push_back(std::popcount(f));
            rest &= rest - 1;
        }
    }
    for (auto& s : sig)
        std::sort(s.begin(), s.end());
    return sig;
}

} // namespace

std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                                        std::size_t max_vertices)
{
    if (a.is_void() || b.is_void())
        throw InputError("isomorphism test on a void complex");
    if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
        throw CapacityError("isomorphism search limited to " + std::to_string(max_vertices) +
                            " vertices");
    if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size())
        return std::nullopt;

    auto sizes = [](const SimplicialComplex& K) {
        std::vector<int> s;
        for (Mask f : K.facets())
            s.push_back(std::popcount(f));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b))
        return std::nullopt;

    const std::size_t n = a.vertex_count();
    auto sig_a = vertex_signatures(a);
    auto sig_b = vertex_signatures(b);

    IsoSearch s{a, b, n, {}, std::vector<std::vector<std::size_t>>(n), std::vector<int>(n, -1),
                std::vector<bool>(n, false)};
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            if (sig_a[v] == sig_b[w])
                s.options[v].push_back(w);
    for (std::size_t v = 0; v < n; ++v)
        if (s.options[v].empty())
            return std::nullopt;

    // Most constrained first, ties broken by how many facets the vertex meets.
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t x, std::size_t y) {
        if (s.options[x].size() != s.options[y].size())
            return s.options[x].size() < s.options[y].size();
        return sig_a[x].size() > sig_a[y].size();
    });

    if (!s.search(0, 0, 0))
        return std::nullopt;

    VertexMap result;
    for (std::size_t v = 0; v < n; ++v)
        result[a.vertices()[v]] = b.vertices()[static_cast<std::size_t>(s.image[v])];
    return result;
}

std::string to_text(const SimplicialComplex& K)
{
    std::ostringstream out;
    const auto& vs = K.vertices();
    out << "vertices: " << vs.size() << '\n';
    bool canonical = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
        canonical = canonical && vs[i] == static_cast<int>(i + 1);
    if (!canonical) {
        out << "labels:";
        for (int v : vs)
            out << ' ' << v;
        out << '\n';
    }
    if (K.is_empty_complex()) {
        out << "empty: true\n";
        return out.str();
    }
    for (const auto& f : K.facet_lists()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

namespace {

std::string_view trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_ints(std::string_view s)
{
    std::vector<int> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw InputError("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size())
            throw InputError("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

SimplicialComplex parse_complex(std::istream& in)
{
    std::optional<std::size_t> count;
    std::optional<std::vector<int>> labels;
    bool empty = false;
    std::vector<std::vector<int>> facets;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto colon = t.find(':');
        if (colon != std::string_view::npos) {
            auto key = trim(t.substr(0, colon));
            auto value = trim(t.substr(colon + 1));
            if (key == "vertices") {
                auto v = parse_ints(value);
                if (v.size() != 1 || v[0] < 0)
                    throw InputError("bad 'vertices:' header");
                count = static_cast<std::size_t>(v[0]);
            } else if (key == "labels") {
                labels = parse_ints(value);
            } else if (key == "empty") {
                if (value != "true" && value != "false")
                    throw InputError("'empty:' must be true or false");
                empty = value == "true";
            } else {
                throw InputError("unknown header '" + std::string(key) + "'");
            }
            continue;
        }
        facets.push_back(parse_ints(t));
    }
    if (!count)
        throw InputError("missing 'vertices:' header");
    std::vector<int> vertices;
    if (labels) {
        if (labels->size() != *count)
            throw InputError("'labels:' length differs from 'vertices:'");
        vertices = *labels;
    } else {
        vertices.resize(*count);
        std::iota(vertices.begin(), vertices.end(), 1);
    }
    return SimplicialComplex::from_facets(std::move(vertices), facets, empty);
}

SimplicialComplex parse_complex(const std::string& text)
{
    std::istringstream in(text);
    return parse_complex(in);
}

} // namespace chainmail
