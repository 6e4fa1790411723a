#include "chainmail/kernels.hpp"

#include <immintrin.h>

namespace chainmail::kernels::avx2 {

namespace {

inline __m256i load4(const Mask* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline __m256i splat(Mask m)
{
    return _mm256_set1_epi64x(static_cast<long long>(m));
}

// Bit i of the result is set iff lane i of v is zero.
inline int zero_lanes(__m256i v)
{
    __m256i eq = _mm256_cmpeq_epi64(v, _mm256_setzero_si256());
    return _mm256_movemask_pd(_mm256_castsi256_pd(eq));
}

} // namespace

bool any_superset(std::span<const Mask> masks, Mask query)
{
    const __m256i q = splat(query);
    std::size_t i = 0;
    const std::size_t n = masks.size();
    for (; i + 4 <= n; i += 4) {
        // andnot(a, b) = ~a & b, so this is query & ~m per lane.
        __m256i missing = _mm256_andnot_si256(load4(masks.data() + i), q);
        if (zero_lanes(missing) != 0)
            return true;
    }
    for (; i < n; ++i)
        if ((query & ~masks[i]) == 0)
            return true;
    return false;
}

bool any_disjoint(std::span<const Mask> masks, Mask query)
{
    const __m256i q = splat(query);
    std::size_t i = 0;
    const std::size_t n = masks.size();
    for (; i + 4 <= n; i += 4) {
        __m256i common = _mm256_and_si256(load4(masks.data() + i), q);
        if (zero_lanes(common) != 0)
            return true;
    }
    for (; i < n; ++i)
        if ((query & masks[i]) == 0)
            return true;
    return false;
}

Mask and_reduce(std::span<const Mask> masks)
{
    __m256i acc = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    const std::size_t n = masks.size();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_and_si256(acc, load4(masks.data() + i));
    alignas(32) Mask lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Mask r = lanes[0] & lanes[1] & lanes[2] & lanes[3];
    for (; i < n; ++i)
        r &= masks[i];
    return r;
}

Mask or_reduce(std::span<const Mask> masks)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    const std::size_t n = masks.size();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, load4(masks.data() + i));
    alignas(32) Mask lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Mask r = lanes[0] | lanes[1] | lanes[2] | lanes[3];
    for (; i < n; ++i)
        r |= masks[i];
    return r;
}

void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out)
{
    const __m256i k = splat(keep);
    std::size_t i = 0;
    const std::size_t n = in.size();
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_and_si256(load4(in.data() + i), k);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
    }
    for (; i < n; ++i)
        out[i] = in[i] & keep;
}

std::size_t count_supersets(std::span<const Mask> masks, Mask query)
{
    const __m256i q = splat(query);
    std::size_t count = 0;
    std::size_t i = 0;
    const std::size_t n = masks.size();
    for (; i + 4 <= n; i += 4) {
        __m256i missing = _mm256_andnot_si256(load4(masks.data() + i), q);
        count += static_cast<std::size_t>(__builtin_popcount(zero_lanes(missing)));
    }
    for (; i < n; ++i)
        count += (query & ~masks[i]) == 0 ? 1 : 0;
    return count;
}

} // namespace chainmail::kernels::avx2
