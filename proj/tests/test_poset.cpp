#include <doctest.h>

#include <random>

#include "chainmail/graph.hpp"
#include "chainmail/poset.hpp"

using namespace chainmail;

namespace {

bool is_flag(const SimplicialComplex& K)
{
    // Every set whose pairs are all faces must be a face.
    std::size_t n = K.vertex_count();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        bool pairs = true;
        for (std::size_t i = 0; i < n && pairs; ++i)
            for (std::size_t j = i + 1; j < n && pairs; ++j)
                if ((s >> i & 1) && (s >> j & 1))
                    pairs = K.contains((Mask{1} << i) | (Mask{1} << j));
        if (pairs && !K.contains(s))
            return false;
    }
    return true;
}

Poset random_poset(std::mt19937_64& rng, int n)
{
    // Relations only go upward in a random linear extension: never a cycle.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0)
                less.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]});
    std::vector<int> elements(order.begin(), order.end());
    std::sort(elements.begin(), elements.end());
    return Poset(elements, less);
}

} // namespace

TEST_CASE("order complexes")
{
    auto anti = order_complex(Poset({1, 2, 3}, {}));
    CHECK(anti.facet_lists() == std::vector<std::vector<int>>{{1}, {2}, {3}});
    auto chain = order_complex(Poset({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(chain == SimplicialComplex::simplex({1, 2, 3, 4}));
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 2}, {2, 1}}), InputError);
}

TEST_CASE("the sparse posets")
{
    auto p1 = p_poset(1);
    CHECK(p1.relations().empty());
    auto p2 = p_poset(2);
    CHECK(p2.relations() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}});
    CHECK(order_complex(p2).facet_lists() == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}});
    for (int t = 1; t <= 6; ++t)
        CHECK(order_complex(p_poset(t)) == delta_complex(double_directed_string(t)));
}

TEST_CASE("realizing posets")
{
    auto K = delta_complex(double_directed_string(2));
    auto P = exists_realizing_poset(K);
    REQUIRE(P.has_value());
    CHECK(order_complex(*P) == K);
    auto full = exists_realizing_poset(SimplicialComplex::simplex({1, 2, 3, 4}));
    REQUIRE(full.has_value());
    CHECK(full->relations().size() == 6);
    auto c5 = SimplicialComplex::from_facets({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK_FALSE(exists_realizing_poset(c5).has_value());
    auto hollow = SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(exists_realizing_poset(hollow).has_value());
    auto unused = SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}});
    CHECK_FALSE(exists_realizing_poset(unused).has_value());
    CHECK_THROWS_AS(exists_realizing_poset(SimplicialComplex::simplex({1, 2, 3, 4}), 3), CapacityError);
}

TEST_CASE("random posets: order complexes are flag and realizable")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto P = random_poset(rng, n);
        auto K = order_complex(P);
        CHECK(is_flag(K));
        auto Q = exists_realizing_poset(K);
        REQUIRE(Q.has_value());
        CHECK(order_complex(*Q) == K);
    }
}

TEST_CASE("poset text round trip")
{
    auto P = p_poset(3);
    CHECK(parse_poset(to_text(P)) == P);
    CHECK(P.covers() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
                                                         {4, 6}});
    CHECK_THROWS_AS(parse_poset("elements: 2\n1 3\n"), InputError);
}
