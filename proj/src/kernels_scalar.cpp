#include "chainmail/kernels.hpp"

namespace chainmail::kernels::scalar {

bool any_superset(std::span<const Mask> masks, Mask query)
{
    for (Mask m : masks)
        if ((query & ~m) == 0)
            return true;
    return false;
}

bool any_disjoint(std::span<const Mask> masks, Mask query)
{
    for (Mask m : masks)
        if ((query & m) == 0)
            return true;
    return false;
}

Mask and_reduce(std::span<const Mask> masks)
{
    Mask acc = ~Mask{0};
    for (Mask m : masks)
        acc &= m;
    return acc;
}

Mask or_reduce(std::span<const Mask> masks)
{
    Mask acc = 0;
    for (Mask m : masks)
        acc |= m;
    return acc;
}

void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out)
{
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = in[i] & keep;
}

std::size_t count_supersets(std::span<const Mask> masks, Mask query)
{
    std::size_t n = 0;
    for (Mask m : masks)
        n += (query & ~m) == 0 ? 1 : 0;
    return n;
}

} // namespace chainmail::kernels::scalar
