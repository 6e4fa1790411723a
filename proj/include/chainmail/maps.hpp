#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainmail/complex.hpp"
#include "chainmail/graph.hpp"
#include "chainmail/homology.hpp"

namespace chainmail {

/// Vertex assignment between two complexes. Whether faces go to faces is
/// checked by is_simplicial, not assumed.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, const VertexMap& assignment);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }

    int operator()(int source_vertex) const;
    /// Target face (as a mask) of a source face, duplicates collapsed.
    Mask image(Mask source_face) const;
    /// Source vertices sent into the target face `S`.
    Mask preimage(Mask target_face) const;
    /// Target vertex index of source vertex index i.
    std::size_t image_index(std::size_t i) const { return image_[i]; }

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<std::size_t> image_;
};

/// The map sending each vertex to itself.
SimplicialMap identity_map(const SimplicialComplex& K);

/// φ: Δ(T̃) -> D_2(T), (x -> y) ↦ x. Requires a nonempty tree.
SimplicialMap phi_map(const Tree& T);

bool is_simplicial(const SimplicialMap& f);

/// First source facet (lex order) whose image is not a target face.
std::optional<Mask> non_simplicial_witness(const SimplicialMap& f);

/// Faces of the source whose image lies in the closed simplex S. The vertex
/// set is the preimage of S. Throws InputError when S is not a target face.
SimplicialComplex fiber_subcomplex(const SimplicialMap& f, const std::vector<int>& S);
SimplicialComplex fiber_subcomplex(const SimplicialMap& f, Mask S);

struct NonConeFiber {
    std::vector<int> face;
    bool homologically_contractible = false;
};

struct QuillenReport {
    std::size_t faces_checked = 0;
    std::vector<NonConeFiber> non_cone_fibers;

    bool all_cones() const { return non_cone_fibers.empty(); }
};

/// Checks every nonempty target face for a cone fiber; non-cone fibers are
/// listed together with a homology-level contractibility verdict.
QuillenReport verify_quillen_fibers(const SimplicialMap& f);

/// Induced chain map in dimension d (columns: source d-faces, rows: target
/// d-faces, lexicographic order). d = -1 is the augmentation [1].
SparseIntegerMatrix chain_map(const SimplicialMap& f,
                              const std::vector<std::vector<Mask>>& source_levels,
                              const std::vector<std::vector<Mask>>& target_levels, int d);

/// Whether f induces an isomorphism on reduced rational homology. Checks
/// that the chain map commutes with the boundaries (InternalError if not),
/// then that the mapping cone is rationally acyclic.
bool rational_homology_iso(const SimplicialMap& f);

} // namespace chainmail
