#pragma once

// Shape parameters flattened for the batch kernels. Built once per call by
// the dispatcher so every variant starts from identical constants.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "movable/geometry.hpp"

namespace movable::kernels::detail {

struct CircleParams {
  double cx, cy;
  double limit;  // radius + tolerance
};

struct StripParams {
  double ax, ay;
  double ex, ey;  // b - a, endpoints in canonical order
  double len2;
  double limit;
};

struct PolygonParams {
  // Edge i runs from (ax[i], ay[i]) along (ex[i], ey[i]); a point is outside
  // when cross(e, p - a) < threshold[i].
  std::vector<double> ax, ay, ex, ey, threshold;
};

CircleParams prepare(const CircleShape& s);
StripParams prepare(const StripShape& s);
PolygonParams prepare(const ConvexPolygonShape& s);

struct Batch {
  const double* xs;
  const double* ys;
  std::uint8_t* out;
  std::size_t n;
};

void circle_scalar(const CircleParams& c, Batch b);
void strip_scalar(const StripParams& s, Batch b);
void polygon_scalar(const PolygonParams& poly, Batch b);

#if defined(MOVABLE_HAVE_AVX2)
void circle_avx2(const CircleParams& c, Batch b);
void strip_avx2(const StripParams& s, Batch b);
void polygon_avx2(const PolygonParams& poly, Batch b);
#endif

}  // namespace movable::kernels::detail
