#include "chainmail/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace chainmail::kernels {

bool avx2_available()
{
#if defined(CHAINMAIL_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Isa detect()
{
    const char* force = std::getenv("CHAINMAIL_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0')
        return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

struct Table {
    bool (*any_superset)(std::span<const Mask>, Mask);
    bool (*any_disjoint)(std::span<const Mask>, Mask);
    Mask (*and_reduce)(std::span<const Mask>);
    Mask (*or_reduce)(std::span<const Mask>);
    void (*restrict_to)(std::span<const Mask>, Mask, std::span<Mask>);
    std::size_t (*count_supersets)(std::span<const Mask>, Mask);
};

const Table& table()
{
    static const Table t = [] {
#if defined(CHAINMAIL_HAVE_AVX2)
        if (detect() == Isa::avx2)
            return Table{avx2::any_superset, avx2::any_disjoint, avx2::and_reduce,
                         avx2::or_reduce, avx2::restrict_to, avx2::count_supersets};
#endif
        return Table{scalar::any_superset, scalar::any_disjoint, scalar::and_reduce,
                     scalar::or_reduce, scalar::restrict_to, scalar::count_supersets};
    }();
    return t;
}

} // namespace

Isa active_isa()
{
    static const Isa isa = detect();
    return isa;
}

const char* isa_name(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool any_superset(std::span<const Mask> masks, Mask query)
{
    return table().any_superset(masks, query);
}

bool any_disjoint(std::span<const Mask> masks, Mask query)
{
    return table().any_disjoint(masks, query);
}

Mask and_reduce(std::span<const Mask> masks)
{
    return table().and_reduce(masks);
}

Mask or_reduce(std::span<const Mask> masks)
{
    return table().or_reduce(masks);
}

void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out)
{
    table().restrict_to(in, keep, out);
}

std::size_t count_supersets(std::span<const Mask> masks, Mask query)
{
    return table().count_supersets(masks, query);
}

} // namespace chainmail::kernels
