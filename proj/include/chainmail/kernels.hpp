#pragma once

// Bitmask kernels over arrays of faces.
//
// A face is a 64-bit mask over vertex indices. Every routine here has a
// scalar reference version and, on x86-64, an AVX2 version; the public
// entry points dispatch once at runtime on CPU support. Setting
// CHAINMAIL_FORCE_SCALAR=1 pins the scalar path.

#include <cstddef>
#include <cstdint>
#include <span>

namespace chainmail::kernels {

using Mask = std::uint64_t;

enum class Isa { scalar, avx2 };

/// The instruction set the dispatching entry points use.
Isa active_isa();
bool avx2_available();
const char* isa_name(Isa isa);

/// True iff some mask m satisfies (query & ~m) == 0.
bool any_superset(std::span<const Mask> masks, Mask query);

/// True iff some mask m satisfies (query & m) == 0.
bool any_disjoint(std::span<const Mask> masks, Mask query);

/// Bitwise AND of all masks; all ones for an empty span.
Mask and_reduce(std::span<const Mask> masks);

/// Bitwise OR of all masks; zero for an empty span.
Mask or_reduce(std::span<const Mask> masks);

/// out[i] = in[i] & keep. `out` must be at least as long as `in`.
void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out);

/// Number of masks m with (query & ~m) == 0.
std::size_t count_supersets(std::span<const Mask> masks, Mask query);

namespace scalar {
bool any_superset(std::span<const Mask> masks, Mask query);
bool any_disjoint(std::span<const Mask> masks, Mask query);
Mask and_reduce(std::span<const Mask> masks);
Mask or_reduce(std::span<const Mask> masks);
void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out);
std::size_t count_supersets(std::span<const Mask> masks, Mask query);
} // namespace scalar

#if defined(CHAINMAIL_HAVE_AVX2)
namespace avx2 {
bool any_superset(std::span<const Mask> masks, Mask query);
bool any_disjoint(std::span<const Mask> masks, Mask query);
Mask and_reduce(std::span<const Mask> masks);
Mask or_reduce(std::span<const Mask> masks);
void restrict_to(std::span<const Mask> in, Mask keep, std::span<Mask> out);
std::size_t count_supersets(std::span<const Mask> masks, Mask query);
} // namespace avx2
#endif

} // namespace chainmail::kernels
