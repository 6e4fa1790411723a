#include <doctest.h>

#include <random>

#include "chainmail/graph.hpp"
#include "chainmail/homology.hpp"
#include "chainmail/strata.hpp"
#include "oracles.hpp"

using namespace chainmail;

namespace {

bool unimodular(const IntegerMatrix& U)
{
    // Square with det ±1: its Smith form is all ones.
    if (U.rows() != U.cols())
        return false;
    auto f = smith_normal_form(U);
    if (f.rank != U.rows())
        return false;
    for (const auto& d : f.factors)
        if (d != 1)
            return false;
    return true;
}

SimplicialComplex hollow_triangle()
{
    return SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("boundary matrices")
{
    auto d1 = boundary_matrix(hollow_triangle(), 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    for (std::size_t c = 0; c < 3; ++c) {
        int plus = 0, minus = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            plus += d1.at(r, c) == 1;
            minus += d1.at(r, c) == -1;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }
    auto d0 = boundary_matrix(SimplicialComplex::simplex({1, 2}), 0);
    CHECK(d0 == IntegerMatrix(1, 2, {1, 1}));
}

TEST_CASE("smith normal form examples")
{
    auto id = smith_normal_form(IntegerMatrix::identity(2));
    CHECK(id.rank == 2);
    CHECK(id.factors == std::vector<mpz_class>{1, 1});
    auto m = smith_normal_form(IntegerMatrix(2, 2, {2, 4, 6, 8}));
    CHECK(m.rank == 2);
    CHECK(m.factors == std::vector<mpz_class>{2, 4});
    auto z = smith_normal_form(IntegerMatrix(3, 2));
    CHECK(z.rank == 0);
    CHECK(z.factors.empty());
    auto e = smith_normal_form(IntegerMatrix(0, 4));
    CHECK(e.rank == 0);
}

TEST_CASE("smith decomposition reconstructs the input")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        IntegerMatrix M(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                M.at(r, c) = static_cast<long>(rng() % 13) - 6;
        auto dec = smith_decomposition(M);
        CHECK(dec.left * M * dec.right == dec.diagonal);
        CHECK(unimodular(dec.left));
        CHECK(unimodular(dec.right));
        for (std::size_t i = 0; i < dec.form.rank; ++i)
            CHECK(dec.diagonal.at(i, i) == dec.form.factors[i]);
    }
}

TEST_CASE("smith rank agrees with the Bareiss oracle; divisibility chain")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        auto M = oracle::random_matrix(rng);
        auto f = smith_normal_form(M);
        CHECK(f.rank == oracle::bareiss_rank(M));
        CHECK(f.factors.size() == f.rank);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(f.factors[i] > 0);
            if (i + 1 < f.factors.size())
                CHECK(mpz_divisible_p(f.factors[i + 1].get_mpz_t(), f.factors[i].get_mpz_t()) != 0);
        }
    }
}

TEST_CASE("sparse and dense smith forms agree")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        SparseIntegerMatrix S(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0)
                    S.add(r, c, static_cast<std::int64_t>(rng() % 7) - 3);
        auto a = smith_normal_form(S);
        auto b = smith_normal_form(S.to_dense());
        CHECK(a.rank == b.rank);
        CHECK(a.factors == b.factors);
    }
    SparseIntegerMatrix big(2, 2);
    big.add(0, 0, INT64_MAX);
    big.add(0, 1, INT64_MAX);
    big.add(1, 0, 3);
    big.add(1, 1, INT64_MIN + 1);
    auto a = smith_normal_form(big);
    auto b = smith_normal_form(big.to_dense());
    CHECK(a.factors == b.factors);
}

TEST_CASE("homology examples")
{
    CHECK(matches_sphere(delta_complex(double_directed_string(3)), 1));
    CHECK(matches_point(delta_complex(double_directed_string(5))));
    CHECK(matches_sphere(delta_complex(double_directed_string(4)), 2));
    CHECK(matches_point(delta_complex(double_directed_string(2))));
    CHECK(matches_sphere(hollow_triangle(), 1));
    auto h = reduced_homology(delta_lambda(Partition({3})));
    REQUIRE(h.size() == 1);
    CHECK(h[0].degree == -1);
    CHECK(h[0].betti == 1);
    CHECK(matches_sphere(SimplicialComplex::empty_complex(), -1));
    CHECK_THROWS_AS(reduced_homology(SimplicialComplex::void_complex()), InputError);
}

TEST_CASE("torsion of the projective plane")
{
    auto rp2 = SimplicialComplex::from_facets(
        {1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                             {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    auto h = reduced_homology(rp2);
    CHECK(h[2].betti == 0);
    CHECK(h[2].torsion == std::vector<mpz_class>{2});
    CHECK(h[3].trivial());
    CHECK(homology_summary(h) == "H~_1 = Z/2");
    CHECK(homology_json(h) == R"({"1":{"betti":0,"torsion":[2]}})");
}

TEST_CASE("corpus identities")
{
    for (const auto& [name, K] : oracle::corpus(5)) {
        CAPTURE(name);
        auto levels = faces_by_dimension(K);
        for (int d = 0; d + 1 < static_cast<int>(levels.size()); ++d)
            CHECK(oracle::product_is_zero(sparse_boundary_matrix(levels, d),
                                          sparse_boundary_matrix(levels, d + 1)));
        long long alt = 0;
        for (const auto& g : reduced_homology(K))
            alt += (g.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(g.betti);
        CHECK(alt == reduced_euler_characteristic(K));
    }
}
