#pragma once

// Batch containment kernels: one shape against many points.
//
// Every kernel has a portable scalar reference and, where the CPU allows, a
// vectorized variant. The variant is chosen once at runtime; setting the
// environment variable MOVABLE_SIMD=scalar forces the reference path. All
// variants produce bit-identical masks (same operations in the same order,
// no contraction into FMA).

#include <cstdint>
#include <span>
#include <string_view>

#include "movable/geometry.hpp"

namespace movable::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

// Whether this binary and this CPU can run the variant.
bool available(Isa isa);

// Variant used by the dispatching overloads below.
Isa active();

// out[i] = 1 when (xs[i], ys[i]) lies in the closed shape, else 0.
// The three spans must have equal length.
void contains_batch(const Shape& shape, std::span<const double> xs, std::span<const double> ys,
                    std::span<std::uint8_t> out);

// Same, pinned to one variant (throws if it is not available).
void contains_batch(Isa isa, const Shape& shape, std::span<const double> xs,
                    std::span<const double> ys, std::span<std::uint8_t> out);

}  // namespace movable::kernels
