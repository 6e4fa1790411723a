#include "chainmail/maps.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "chainmail/strata.hpp"

namespace chainmail {

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             const VertexMap& assignment)
    : source_(std::move(source)), target_(std::move(target))
{
    image_.reserve(source_.vertex_count());
    for (int v : source_.vertices()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw InputError("vertex map misses source vertex " + std::to_string(v));
        image_.push_back(target_.index_of(it->second));
    }
}

int SimplicialMap::operator()(int source_vertex) const
{
    return target_.vertices()[image_[source_.index_of(source_vertex)]];
}

Mask SimplicialMap::image(Mask source_face) const
{
    Mask out = 0;
    while (source_face != 0) {
        auto i = static_cast<std::size_t>(std::countr_zero(source_face));
        out |= Mask{1} << image_[i];
        source_face &= source_face - 1;
    }
    return out;
}

Mask SimplicialMap::preimage(Mask target_face) const
{
    Mask out = 0;
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (target_face & (Mask{1} << image_[i]))
            out |= Mask{1} << i;
    return out;
}

SimplicialMap identity_map(const SimplicialComplex& K)
{
    VertexMap id;
    for (int v : K.vertices())
        id[v] = v;
    return SimplicialMap(K, K, id);
}

SimplicialMap phi_map(const Tree& T)
{
    DirectedGraph directed = direct_augmented(T);
    SimplicialComplex source = delta_complex(directed);
    SimplicialComplex target = disconnecting_complex(T, 2);
    VertexMap assignment;
    for (std::size_t e = 0; e < directed.edges().size(); ++e)
        assignment[static_cast<int>(e + 1)] = directed.edges()[e].first;
    return SimplicialMap(std::move(source), std::move(target), assignment);
}

bool is_simplicial(const SimplicialMap& f)
{
    return !non_simplicial_witness(f).has_value();
}

std::optional<Mask> non_simplicial_witness(const SimplicialMap& f)
{
    for (Mask F : f.source().facets())
        if (!f.target().contains(f.image(F)))
            return F;
    return std::nullopt;
}

namespace {

// Packs the bits of `m` selected by `keep` into the low bits.
Mask compress(Mask m, Mask keep)
{
    Mask out = 0;
    std::size_t pos = 0;
    while (keep != 0) {
        Mask bit = keep & (~keep + 1);
        if (m & bit)
            out |= Mask{1} << pos;
        ++pos;
        keep &= keep - 1;
    }
    return out;
}

// Maximal members of {F ∩ W : F a source facet}, as masks over the source.
std::vector<Mask> fiber_facets(const SimplicialMap& f, Mask W, std::vector<Mask>& scratch)
{
    auto facets = f.source().facets();
    scratch.resize(facets.size());
    kernels::restrict_to(facets, W, scratch);
    return maximal_masks(scratch);
}

} // namespace

SimplicialComplex fiber_subcomplex(const SimplicialMap& f, Mask S)
{
    if (!f.target().contains(S))
        throw InputError("fiber requested over a non-face");
    const Mask W = f.preimage(S);
    std::vector<Mask> scratch;
    std::vector<Mask> facets;
    for (Mask F : fiber_facets(f, W, scratch))
        facets.push_back(compress(F, W));
    return SimplicialComplex::from_masks(f.source().labels_of(W), std::move(facets), true);
}

SimplicialComplex fiber_subcomplex(const SimplicialMap& f, const std::vector<int>& S)
{
    return fiber_subcomplex(f, f.target().mask_of(S));
}

QuillenReport verify_quillen_fibers(const SimplicialMap& f)
{
    QuillenReport report;
    if (f.target().is_void() || f.source().is_void())
        return report;
    // Preimage of each target vertex, so W(S) is an OR over S.
    const std::size_t nt = f.target().vertex_count();
    std::vector<Mask> pre(nt, 0);
    for (std::size_t i = 0; i < f.source().vertex_count(); ++i)
        pre[f.image_index(i)] |= Mask{1} << i;

    std::vector<Mask> scratch;
    const auto levels = faces_by_dimension(f.target());
    for (std::size_t level = 1; level < levels.size(); ++level) {
        for (Mask S : levels[level]) {
            ++report.faces_checked;
            Mask W = 0;
            for (Mask rest = S; rest != 0; rest &= rest - 1)
                W |= pre[static_cast<std::size_t>(std::countr_zero(rest))];
            auto facets = fiber_facets(f, W, scratch);
            if (kernels::and_reduce(facets) != 0)
                continue;
            NonConeFiber bad;
            bad.face = f.target().labels_of(S);
            bad.homologically_contractible = matches_point(fiber_subcomplex(f, S));
            report.non_cone_fibers.push_back(std::move(bad));
        }
    }
    return report;
}

namespace {

int permutation_sign(std::vector<std::size_t> v)
{
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j])
                sign = -sign;
    return sign;
}

std::unordered_map<Mask, std::uint32_t> index_level(const std::vector<Mask>& level)
{
    std::unordered_map<Mask, std::uint32_t> idx;
    idx.reserve(level.size() * 2);
    for (std::size_t i = 0; i < level.size(); ++i)
        idx.emplace(level[i], static_cast<std::uint32_t>(i));
    return idx;
}

const std::vector<Mask>& level_or_empty(const std::vector<std::vector<Mask>>& levels, int d)
{
    static const std::vector<Mask> none;
    const auto i = static_cast<std::size_t>(d + 1);
    return (d >= -1 && i < levels.size()) ? levels[i] : none;
}

SparseIntegerMatrix multiply(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw InternalError("sparse shapes do not compose");
    SparseIntegerMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (auto [k, bv] : b.column(j))
            for (auto [i, av] : a.column(k))
                acc[i] += av * bv;
        for (auto [i, v] : acc)
            out.add(i, j, v);
    }
    return out;
}

bool same_matrix(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.column(j) != b.column(j))
            return false;
    return true;
}

// ∂_d as a (f_{d-1} x f_d) matrix, with ∂_{-1} the empty 0 x f_{-1} map.
SparseIntegerMatrix boundary_or_zero(const std::vector<std::vector<Mask>>& levels, int d)
{
    if (d >= 0)
        return sparse_boundary_matrix(levels, d);
    return SparseIntegerMatrix(0, level_or_empty(levels, d).size());
}

} // namespace

SparseIntegerMatrix chain_map(const SimplicialMap& f,
                              const std::vector<std::vector<Mask>>& source_levels,
                              const std::vector<std::vector<Mask>>& target_levels, int d)
{
    const auto& src = level_or_empty(source_levels, d);
    const auto& dst = level_or_empty(target_levels, d);
    SparseIntegerMatrix F(dst.size(), src.size());
    if (src.empty() || dst.empty())
        return F;
    auto row_of = index_level(dst);
    std::vector<std::size_t> images;
    for (std::size_t c = 0; c < src.size(); ++c) {
        images.clear();
        for (Mask rest = src[c]; rest != 0; rest &= rest - 1)
            images.push_back(f.image_index(static_cast<std::size_t>(std::countr_zero(rest))));
        Mask tau = f.image(src[c]);
        if (static_cast<std::size_t>(std::popcount(tau)) != images.size())
            continue;  // collapsed simplex
        auto it = row_of.find(tau);
        if (it == row_of.end())
            throw InputError("map sends a face outside the target");
        F.add(it->second, c, permutation_sign(images));
    }
    return F;
}

bool rational_homology_iso(const SimplicialMap& f)
{
    if (f.source().is_void() || f.target().is_void())
        throw InputError("chain maps need non-void complexes");
    const auto S = faces_by_dimension(f.source());
    const auto T = faces_by_dimension(f.target());
    const int dim_s = static_cast<int>(S.size()) - 2;
    const int dim_t = static_cast<int>(T.size()) - 2;

    std::vector<SparseIntegerMatrix> F;  // F[d+1] in dimension d
    for (int d = -1; d <= dim_s; ++d)
        F.push_back(chain_map(f, S, T, d));
    auto F_at = [&](int d) -> SparseIntegerMatrix {
        if (d >= -1 && d <= dim_s)
            return F[static_cast<std::size_t>(d + 1)];
        return SparseIntegerMatrix(level_or_empty(T, d).size(), level_or_empty(S, d).size());
    };

    // ∂T_d F_d == F_{d-1} ∂S_d
    for (int d = 0; d <= dim_s; ++d) {
        auto lhs = multiply(boundary_or_zero(T, d), F_at(d));
        auto rhs = multiply(F_at(d - 1), boundary_or_zero(S, d));
        if (!same_matrix(lhs, rhs))
            throw InternalError("induced chain map does not commute with the boundary in degree " +
                                std::to_string(d));
    }

    // Mapping cone: C_n = S_{n-1} ⊕ T_n with D(a, b) = (-∂a, F a + ∂b).
    const int top = std::max(dim_s + 1, dim_t);
    auto cone_size = [&](int n) {
        return level_or_empty(S, n - 1).size() + level_or_empty(T, n).size();
    };
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[n+1] = rank D_n
    for (int n = 0; n <= top; ++n) {
        const std::size_t s_rows = level_or_empty(S, n - 2).size();
        const std::size_t t_rows = level_or_empty(T, n - 1).size();
        const std::size_t s_cols = level_or_empty(S, n - 1).size();
        const std::size_t t_cols = level_or_empty(T, n).size();
        SparseIntegerMatrix D(s_rows + t_rows, s_cols + t_cols);
        if (n - 1 >= 0) {
            auto dS = boundary_or_zero(S, n - 1);
            for (std::size_t c = 0; c < dS.cols(); ++c)
                for (auto [r, v] : dS.column(c))
                    D.add(r, c, -v);
        }
        auto Fn = F_at(n - 1);
        for (std::size_t c = 0; c < Fn.cols(); ++c)
            for (auto [r, v] : Fn.column(c))
                D.add(s_rows + r, c, v);
        if (n >= 0 && n <= dim_t) {
            auto dT = boundary_or_zero(T, n);
            for (std::size_t c = 0; c < dT.cols(); ++c)
                for (auto [r, v] : dT.column(c))
                    D.add(s_rows + r, s_cols + c, v);
        }
        ranks[static_cast<std::size_t>(n + 1)] = smith_normal_form(D).rank;
    }
    for (int n = -1; n <= top; ++n) {
        const std::size_t rank_in = ranks[static_cast<std::size_t>(n + 1)];
        const std::size_t rank_out = ranks[static_cast<std::size_t>(n + 2)];
        if (cone_size(n) != rank_in + rank_out)
            return false;
    }
    return true;
}

} // namespace chainmail
