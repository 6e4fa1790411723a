#include <doctest.h>

#include "chainmail/maps.hpp"
#include "chainmail/strata.hpp"
#include "chainmail/trees.hpp"

using namespace chainmail;

namespace {

SimplicialComplex hollow_triangle()
{
    return SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("identity maps")
{
    auto K = hollow_triangle();
    auto id = identity_map(K);
    CHECK(is_simplicial(id));
    CHECK(verify_quillen_fibers(id).all_cones());
    CHECK(rational_homology_iso(id));
    CHECK(id(2) == 2);
}

TEST_CASE("collapsing maps")
{
    auto point = SimplicialComplex::simplex({1});
    SimplicialMap f(hollow_triangle(), point, {{1, 1}, {2, 1}, {3, 1}});
    CHECK(is_simplicial(f));
    CHECK_FALSE(rational_homology_iso(f));
    auto report = verify_quillen_fibers(f);
    REQUIRE(report.non_cone_fibers.size() == 1);
    CHECK(report.non_cone_fibers[0].face == std::vector<int>{1});
    CHECK_FALSE(report.non_cone_fibers[0].homologically_contractible);

    // An edge collapsed to a vertex is a homotopy equivalence.
    auto edge = SimplicialComplex::simplex({1, 2});
    SimplicialMap g(edge, point, {{1, 1}, {2, 1}});
    CHECK(rational_homology_iso(g));
    CHECK(verify_quillen_fibers(g).all_cones());
}

TEST_CASE("non-simplicial maps are detected")
{
    auto two_points = SimplicialComplex::from_facets({1, 2}, {{1}, {2}});
    SimplicialMap f(SimplicialComplex::simplex({1, 2}), two_points, {{1, 1}, {2, 2}});
    CHECK_FALSE(is_simplicial(f));
    REQUIRE(non_simplicial_witness(f).has_value());
    CHECK(*non_simplicial_witness(f) == 0b11);
    CHECK_THROWS_AS(SimplicialMap(two_points, two_points, {{1, 1}}), InputError);
    CHECK_THROWS_AS(SimplicialMap(two_points, two_points, {{1, 1}, {2, 7}}), InputError);
}

TEST_CASE("fibers")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {2, 3}});
    auto L = SimplicialComplex::simplex({1, 2});
    SimplicialMap f(K, L, {{1, 1}, {2, 2}, {3, 1}});
    auto over_empty = fiber_subcomplex(f, Mask{0});
    CHECK(over_empty.is_empty_complex());
    auto over_1 = fiber_subcomplex(f, std::vector<int>{1});
    CHECK(over_1.vertices() == std::vector<int>{1, 3});
    CHECK(over_1.facet_lists() == std::vector<std::vector<int>>{{1}, {3}});
    auto over_all = fiber_subcomplex(f, std::vector<int>{1, 2});
    CHECK(over_all == K);
    auto two_points = SimplicialComplex::from_facets({1, 2}, {{1}, {2}});
    SimplicialMap g(two_points, two_points, {{1, 1}, {2, 2}});
    CHECK_THROWS_AS(fiber_subcomplex(g, std::vector<int>{1, 2}), InputError);
}

TEST_CASE("chain maps commute with boundaries")
{
    auto T = string_tree(3);
    auto phi = phi_map(T);
    auto s = faces_by_dimension(phi.source());
    auto t = faces_by_dimension(phi.target());
    auto f0 = chain_map(phi, s, t, 0).to_dense();
    auto f1 = chain_map(phi, s, t, 1).to_dense();
    auto ds = sparse_boundary_matrix(s, 1).to_dense();
    auto dt = sparse_boundary_matrix(t, 1).to_dense();
    CHECK(dt * f1 == f0 * ds);
}

TEST_CASE("phi on strings")
{
    for (int t = 1; t <= 5; ++t) {
        CAPTURE(t);
        auto phi = phi_map(string_tree(t));
        CHECK(phi.source().vertex_count() == static_cast<std::size_t>(2 * t));
        CHECK(phi.target().vertex_count() == static_cast<std::size_t>(t + 2));
        CHECK(is_simplicial(phi));
        CHECK(verify_quillen_fibers(phi).all_cones());
        CHECK(rational_homology_iso(phi));
    }
    CHECK_THROWS_AS(phi_map(Tree()), InputError);
}

TEST_CASE("phi on the three-leaf star is not simplicial")
{
    Tree star({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
    auto phi = phi_map(star);
    CHECK_FALSE(is_simplicial(phi));
    auto h_source = reduced_homology(phi.source());
    auto h_target = reduced_homology(phi.target());
    CHECK(matches_sphere(h_source, 2));
    CHECK(h_target[2].betti == 2);
}
