#include <doctest.h>

#include <functional>
#include <set>

#include "chainmail/trees.hpp"

using namespace chainmail;

namespace {

// Canonical forms of all labeled trees on n vertices, via every Prüfer
// sequence.
std::set<std::string> prufer_classes(int n)
{
    std::set<std::string> out;
    if (n <= 2) {
        out.insert(canonical_form(enumerate_trees(n)[0]));
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == seq.size()) {
            out.insert(canonical_form(prufer_decode(n, seq)));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            seq[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("unlabeled tree counts")
{
    const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_trees(n).size() == counts[static_cast<std::size_t>(n - 1)]);
    CHECK_THROWS_AS(enumerate_trees(0), InputError);
    CHECK_THROWS_AS(enumerate_trees(13), CapacityError);
}

TEST_CASE("enumeration agrees with deduplicated Prüfer sequences")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> enumerated;
        for (const auto& T : enumerate_trees(n)) {
            CHECK(T.size() == static_cast<std::size_t>(n));
            enumerated.insert(canonical_form(T));
        }
        CHECK(enumerated == prufer_classes(n));
    }
}

TEST_CASE("canonical form ignores labels")
{
    Tree a({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
    Tree b({10, 20, 30, 40, 50}, {{50, 40}, {40, 10}, {10, 20}, {10, 30}});
    Tree c({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("Prüfer decoding")
{
    auto T = prufer_decode(4, {2, 2});
    CHECK(T.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});
    CHECK_THROWS_AS(prufer_decode(4, {2}), InputError);
    CHECK_THROWS_AS(prufer_decode(4, {2, 5}), InputError);
}

TEST_CASE("random trees are seeded and valid")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_tree(5, seed);
        auto b = random_tree(5, seed);
        CHECK(a.edges() == b.edges());
        CHECK(a.size() == 5);
    }
    std::set<std::vector<Edge>> distinct;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        distinct.insert(random_tree(6, seed).edges());
    CHECK(distinct.size() > 10);
    CHECK(random_tree(1, 3).size() == 1);
}
