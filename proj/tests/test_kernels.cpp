#include <doctest.h>

#include <random>
#include <vector>

#include "chainmail/kernels.hpp"

using namespace chainmail::kernels;

namespace {

std::vector<Mask> random_masks(std::mt19937_64& rng, std::size_t n, int density)
{
    std::vector<Mask> out(n);
    for (auto& m : out) {
        m = ~Mask{0};
        for (int i = 0; i < density; ++i)
            m &= rng();
    }
    return out;
}

} // namespace

TEST_CASE("scalar kernels on small inputs")
{
    std::vector<Mask> v{0b0110, 0b1011, 0b1100};
    CHECK(scalar::any_superset(v, 0b0011));
    CHECK_FALSE(scalar::any_superset(v, 0b0101));
    CHECK(scalar::any_disjoint(v, 0b0001));
    CHECK_FALSE(scalar::any_disjoint(v, 0b1010));
    CHECK(scalar::and_reduce(v) == 0);
    CHECK(scalar::or_reduce(v) == 0b1111);
    CHECK(scalar::count_supersets(v, 0b0010) == 2);
    std::vector<Mask> out(3);
    scalar::restrict_to(v, 0b0011, out);
    CHECK(out == std::vector<Mask>{0b0010, 0b0011, 0b0000});
}

TEST_CASE("empty spans")
{
    std::vector<Mask> none;
    CHECK_FALSE(any_superset(none, 0));
    CHECK_FALSE(any_disjoint(none, 0));
    CHECK(and_reduce(none) == ~Mask{0});
    CHECK(or_reduce(none) == 0);
    CHECK(count_supersets(none, 0) == 0);
}

TEST_CASE("dispatch reports an isa")
{
    Isa isa = active_isa();
    CHECK((isa == Isa::scalar || avx2_available()));
    CHECK(std::string(isa_name(isa)).size() > 0);
}

#if defined(CHAINMAIL_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar kernels")
{
    if (!avx2_available())
        return;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng() % 70);
        int density = 1 + static_cast<int>(rng() % 3);
        auto v = random_masks(rng, n, density);
        Mask q = rng() & rng() & rng();
        if (n > 0 && trial % 3 == 0)
            q = v[rng() % n] & rng();
        CHECK(avx2::any_superset(v, q) == scalar::any_superset(v, q));
        CHECK(avx2::any_disjoint(v, q) == scalar::any_disjoint(v, q));
        CHECK(avx2::and_reduce(v) == scalar::and_reduce(v));
        CHECK(avx2::or_reduce(v) == scalar::or_reduce(v));
        CHECK(avx2::count_supersets(v, q) == scalar::count_supersets(v, q));
        std::vector<Mask> a(n), b(n);
        avx2::restrict_to(v, q, a);
        scalar::restrict_to(v, q, b);
        CHECK(a == b);
    }
}
#endif
