// Compiled with -mavx2 only; never called unless the CPU reports AVX2.

#include <immintrin.h>

#include <cmath>

#include "kernel_params.hpp"

namespace movable::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

// Writes the low four bits of a compare mask as 0/1 bytes.
inline void store_mask(__m256d mask, std::uint8_t* out) {
  const int bits = _mm256_movemask_pd(mask);
  out[0] = static_cast<std::uint8_t>(bits & 1);
  out[1] = static_cast<std::uint8_t>((bits >> 1) & 1);
  out[2] = static_cast<std::uint8_t>((bits >> 2) & 1);
  out[3] = static_cast<std::uint8_t>((bits >> 3) & 1);
}

}  // namespace

void circle_avx2(const CircleParams& c, Batch b) {
  const __m256d cx = _mm256_set1_pd(c.cx);
  const __m256d cy = _mm256_set1_pd(c.cy);
  const __m256d limit = _mm256_set1_pd(c.limit);
  std::size_t i = 0;
  for (; i + kLanes <= b.n; i += kLanes) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(b.xs + i), cx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(b.ys + i), cy);
    const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    store_mask(_mm256_cmp_pd(d, limit, _CMP_LE_OQ), b.out + i);
  }
  circle_scalar(c, {b.xs + i, b.ys + i, b.out + i, b.n - i});
}

void strip_avx2(const StripParams& s, Batch b) {
  const __m256d ax = _mm256_set1_pd(s.ax);
  const __m256d ay = _mm256_set1_pd(s.ay);
  const __m256d ex = _mm256_set1_pd(s.ex);
  const __m256d ey = _mm256_set1_pd(s.ey);
  const __m256d len2 = _mm256_set1_pd(s.len2);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d limit = _mm256_set1_pd(s.limit);
  const bool degenerate = !(s.len2 > 0.0);
  std::size_t i = 0;
  for (; i + kLanes <= b.n; i += kLanes) {
    const __m256d px = _mm256_loadu_pd(b.xs + i);
    const __m256d py = _mm256_loadu_pd(b.ys + i);
    __m256d t = zero;
    if (!degenerate) {
      const __m256d proj = _mm256_add_pd(_mm256_mul_pd(_mm256_sub_pd(px, ax), ex),
                                         _mm256_mul_pd(_mm256_sub_pd(py, ay), ey));
      t = _mm256_div_pd(proj, len2);
      t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
    }
    const __m256d dx = _mm256_sub_pd(px, _mm256_add_pd(ax, _mm256_mul_pd(t, ex)));
    const __m256d dy = _mm256_sub_pd(py, _mm256_add_pd(ay, _mm256_mul_pd(t, ey)));
    const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    store_mask(_mm256_cmp_pd(d, limit, _CMP_LE_OQ), b.out + i);
  }
  strip_scalar(s, {b.xs + i, b.ys + i, b.out + i, b.n - i});
}

void polygon_avx2(const PolygonParams& poly, Batch b) {
  const std::size_t edges = poly.ax.size();
  std::size_t i = 0;
  for (; i + kLanes <= b.n; i += kLanes) {
    const __m256d px = _mm256_loadu_pd(b.xs + i);
    const __m256d py = _mm256_loadu_pd(b.ys + i);
    __m256d inside = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (std::size_t e = 0; e < edges; ++e) {
      const __m256d c =
          _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(poly.ex[e]), _mm256_sub_pd(py, _mm256_set1_pd(poly.ay[e]))),
                        _mm256_mul_pd(_mm256_set1_pd(poly.ey[e]), _mm256_sub_pd(px, _mm256_set1_pd(poly.ax[e]))));
      inside = _mm256_and_pd(inside, _mm256_cmp_pd(c, _mm256_set1_pd(poly.threshold[e]), _CMP_GE_OQ));
      if (_mm256_movemask_pd(inside) == 0) break;
    }
    store_mask(inside, b.out + i);
  }
  polygon_scalar(poly, {b.xs + i, b.ys + i, b.out + i, b.n - i});
}

}  // namespace movable::kernels::detail
