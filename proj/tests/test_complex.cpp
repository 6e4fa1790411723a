#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "chainmail/complex.hpp"

using namespace chainmail;

namespace {

// All faces by brute force over subsets.
std::set<Mask> all_faces(const SimplicialComplex& K)
{
    std::set<Mask> out;
    std::size_t n = K.vertex_count();
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (K.contains(s))
            out.insert(s);
    return out;
}

} // namespace

TEST_CASE("void and empty complexes differ")
{
    auto v = SimplicialComplex::void_complex();
    auto e = SimplicialComplex::empty_complex();
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(e.is_empty_complex());
    CHECK(e.dimension() == -1);
    CHECK_THROWS_AS(v.dimension(), InputError);
    CHECK(f_vector(v) == std::vector<std::size_t>{0});
    CHECK(f_vector(e) == std::vector<std::size_t>{1});
    CHECK(reduced_euler_characteristic(e) == -1);
    CHECK(reduced_euler_characteristic(v) == 0);
    CHECK_FALSE(v == e);
}

TEST_CASE("facets are reduced to maximal members")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2}, {1}, {2, 3}, {1, 2}});
    CHECK(K.facet_lists() == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    CHECK(K.contains(std::vector<int>{2}));
    CHECK_FALSE(K.contains(std::vector<int>{1, 3}));
    CHECK(K.used_vertices() == 0b0111);
    CHECK(K.dimension() == 1);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({1, 2}, {{1, 5}}), InputError);
}

TEST_CASE("hollow triangle")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(f_vector(K) == std::vector<std::size_t>{1, 3, 3});
    CHECK(euler_characteristic(K) == 0);
    CHECK(reduced_euler_characteristic(K) == -1);
    CHECK_FALSE(is_cone(K).has_value());
    CHECK(faces(K, 1) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("cone apex")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2, 4}, {2, 3, 4}});
    CHECK(is_cone(K) == 2);
    CHECK_THROWS_AS(is_cone(SimplicialComplex::void_complex()), InputError);
    CHECK_FALSE(is_cone(SimplicialComplex::empty_complex()).has_value());
}

TEST_CASE("minimal nonfaces match brute force")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 7;
        std::vector<int> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(static_cast<int>(i) + 1);
        std::vector<std::vector<int>> nonfaces;
        std::vector<Mask> nf_masks;
        std::size_t count = rng() % 5;
        for (std::size_t j = 0; j < count; ++j) {
            Mask m = rng() & ((Mask{1} << n) - 1);
            if (m == 0)
                continue;
            nf_masks.push_back(m);
            std::vector<int> labels;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1)
                    labels.push_back(vs[i]);
            nonfaces.push_back(labels);
        }
        auto K = SimplicialComplex::from_minimal_nonfaces(vs, nonfaces);
        std::set<Mask> expected;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            bool ok = true;
            for (Mask m : nf_masks)
                ok = ok && (s & m) != m;
            if (ok)
                expected.insert(s);
        }
        CHECK(all_faces(K) == expected);
        std::size_t total = 0;
        for (auto f : f_vector(K))
            total += f;
        CHECK(total == expected.size());
    }
}

TEST_CASE("faces_by_dimension lists every face once in lex order")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3, 4, 5}, {{1, 2, 3}, {2, 4}, {3, 4, 5}});
    auto levels = faces_by_dimension(K);
    std::set<Mask> seen;
    for (std::size_t d = 0; d < levels.size(); ++d) {
        for (std::size_t i = 0; i < levels[d].size(); ++i) {
            CHECK(std::popcount(levels[d][i]) == static_cast<int>(d));
            if (i > 0)
                CHECK(lex_less(levels[d][i - 1], levels[d][i]));
            seen.insert(levels[d][i]);
        }
    }
    CHECK(seen == all_faces(K));
}

TEST_CASE("isomorphism search")
{
    auto a = SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
    auto b = SimplicialComplex::from_facets({7, 8, 9, 10}, {{9, 7}, {7, 10}, {10, 8}});
    auto iso = are_isomorphic(a, b);
    REQUIRE(iso.has_value());
    CHECK(a.relabel(*iso) == b);
    auto star = SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(are_isomorphic(a, star).has_value());
    CHECK_THROWS_AS(are_isomorphic(a, b, 3), CapacityError);
}

TEST_CASE("isomorphism survives random relabeling")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 3 + rng() % 6;
        std::vector<int> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(static_cast<int>(i) + 1);
        std::vector<Mask> facets;
        for (int j = 0; j < 4; ++j)
            facets.push_back(rng() & ((Mask{1} << n) - 1));
        auto K = SimplicialComplex::from_masks(vs, facets, true);
        std::vector<int> perm = vs;
        std::shuffle(perm.begin(), perm.end(), rng);
        VertexMap m;
        for (std::size_t i = 0; i < n; ++i)
            m[vs[i]] = perm[i] + 100;
        auto L = K.relabel(m);
        auto iso = are_isomorphic(K, L);
        REQUIRE(iso.has_value());
        CHECK(K.relabel(*iso) == L);
    }
}

TEST_CASE("text round trip")
{
    auto K = SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2}, {2, 3, 4}});
    CHECK(parse_complex(to_text(K)) == K);
    auto L = SimplicialComplex::from_facets({3, 9, 12}, {{3, 12}, {9}});
    CHECK(parse_complex(to_text(L)) == L);
    auto e = SimplicialComplex::empty_complex({1, 2});
    CHECK(parse_complex(to_text(e)) == e);
    auto v = SimplicialComplex::void_complex({1, 2});
    CHECK(parse_complex(to_text(v)) == v);
    CHECK_THROWS_AS(parse_complex("vertices: 2\n1 3\n"), InputError);
    CHECK_THROWS_AS(parse_complex("nonsense\n"), InputError);
}

TEST_CASE("capacity")
{
    std::vector<int> vs(65);
    for (int i = 0; i < 65; ++i)
        vs[static_cast<std::size_t>(i)] = i;
    CHECK_THROWS_AS(SimplicialComplex::simplex(vs), CapacityError);
}
