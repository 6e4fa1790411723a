#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainmail/errors.hpp"
#include "chainmail/kernels.hpp"

namespace chainmail {

using Mask = kernels::Mask;
using VertexMap = std::map<int, int>;

/// Finite abstract simplicial complex over integer vertex labels.
///
/// Faces are bitmasks over the positions of the sorted vertex labels, so a
/// complex carries at most 64 vertices. Only the facets are stored. The void
/// complex has no faces at all; the empty complex {∅} has the single facet ∅.
/// Vertices that appear in no facet are allowed.
class SimplicialComplex {
public:
    /// The void complex on no vertices.
    SimplicialComplex() = default;

    /// Facets are reduced to their inclusion-maximal members. With no facets
    /// the result is void, unless `empty_if_no_facets` asks for {∅}.
    static SimplicialComplex from_facets(std::vector<int> vertices,
                                         const std::vector<std::vector<int>>& facets,
                                         bool empty_if_no_facets = false);

    /// Same as from_facets with facets already given as masks.
    static SimplicialComplex from_masks(std::vector<int> vertices, std::vector<Mask> facets,
                                        bool empty_if_no_facets = false);

    /// Faces are the subsets of `vertices` containing no listed nonface.
    static SimplicialComplex from_minimal_nonfaces(std::vector<int> vertices,
                                                   const std::vector<std::vector<int>>& nonfaces);

    static SimplicialComplex void_complex(std::vector<int> vertices = {});
    static SimplicialComplex empty_complex(std::vector<int> vertices = {});
    static SimplicialComplex simplex(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    /// Facets as masks, sorted ascending.
    std::span<const Mask> facets() const { return facets_; }
    std::vector<std::vector<int>> facet_lists() const;

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    /// -1 for {∅}; throws InputError for the void complex.
    int dimension() const;

    bool contains(Mask face) const;
    bool contains(const std::vector<int>& face) const;

    /// Vertices that lie in at least one facet.
    Mask used_vertices() const;

    /// Position of a label in vertices(); throws InputError when absent.
    std::size_t index_of(int label) const;
    Mask mask_of(const std::vector<int>& labels) const;
    std::vector<int> labels_of(Mask face) const;

    /// Renames vertices through `mapping`, which must be injective and cover
    /// every vertex.
    SimplicialComplex relabel(const VertexMap& mapping) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::vector<int> vertices, std::vector<Mask> facets)
        : vertices_(std::move(vertices)), facets_(std::move(facets))
    {
    }

    std::vector<int> vertices_;
    std::vector<Mask> facets_;
};

/// Inclusion-maximal members of `masks`, sorted ascending, duplicates removed.
std::vector<Mask> maximal_masks(std::vector<Mask> masks);

/// Lexicographic order on sorted vertex lists, for faces of equal size.
inline bool lex_less(Mask a, Mask b)
{
    Mask diff = a ^ b;
    if (diff == 0)
        return false;
    return (a & diff & (~diff + 1)) != 0;
}

/// Enumerates the facets of a downward-closed family of subsets of
/// {0, .., n-1}. `can_add(face, v)` must report whether face ∪ {v} is in the
/// family, given that `face` is.
template <typename CanAdd>
std::vector<Mask> facets_of_downset(std::size_t n, CanAdd&& can_add)
{
    std::vector<Mask> out;
    auto rec = [&](auto&& self, std::size_t i, Mask face) -> void {
        if (i == n) {
            for (std::size_t v = 0; v < n; ++v) {
                Mask bit = Mask{1} << v;
                if ((face & bit) == 0 && can_add(face, v))
                    return;
            }
            out.push_back(face);
            return;
        }
        const Mask bit = Mask{1} << i;
        bool addable = can_add(face, i);
        if (addable)
            self(self, i + 1, face | bit);
        // A skipped addable vertex must get blocked later; the leaf checks it.
        self(self, i + 1, face);
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Faces grouped by dimension: element 0 holds the (-1)-faces (just ∅),
/// element d+1 the d-faces, each sorted lexicographically.
std::vector<std::vector<Mask>> faces_by_dimension(const SimplicialComplex& K);

/// The d-faces as sorted label lists, in lexicographic order.
std::vector<std::vector<int>> faces(const SimplicialComplex& K, int d);

/// (f_{-1}, f_0, f_1, ...); {0} for the void complex.
std::vector<std::size_t> f_vector(const SimplicialComplex& K);

/// Σ_{d≥0} (-1)^d f_d.
long long euler_characteristic(const SimplicialComplex& K);

/// Σ_{d≥-1} (-1)^d f_d.
long long reduced_euler_characteristic(const SimplicialComplex& K);

/// A vertex lying in every facet, if any. Throws InputError on a void complex.
std::optional<int> is_cone(const SimplicialComplex& K);

/// A vertex bijection carrying the facets of `a` onto those of `b`, found by
/// exhaustive backtracking. Throws CapacityError past `max_vertices`.
std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                                        std::size_t max_vertices = max_iso_vertices());

// Text format:
//   vertices: n
//   labels: l_1 .. l_n      (optional, omitted when the labels are 1..n)
//   empty: true             (optional; {∅} when no facet lines follow)
//   one facet per line, space separated labels
std::string to_text(const SimplicialComplex& K);
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);

} // namespace chainmail
