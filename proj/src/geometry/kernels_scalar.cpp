#include <algorithm>
#include <cmath>
#include <utility>

#include "kernel_params.hpp"

namespace movable::kernels::detail {

CircleParams prepare(const CircleShape& s) {
  return {s.center().x(), s.center().y(), s.radius() + kTolerance};
}

StripParams prepare(const StripShape& s) {
  Point a = s.endpoint_a();
  Point b = s.endpoint_b();
  if (b.x() < a.x() || (b.x() == a.x() && b.y() < a.y())) std::swap(a, b);
  const double ex = b.x() - a.x();
  const double ey = b.y() - a.y();
  return {a.x(), a.y(), ex, ey, ex * ex + ey * ey, s.radius() + kTolerance};
}

PolygonParams prepare(const ConvexPolygonShape& s) {
  PolygonParams p;
  const auto v = s.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    const double ex = b.x() - a.x();
    const double ey = b.y() - a.y();
    p.ax.push_back(a.x());
    p.ay.push_back(a.y());
    p.ex.push_back(ex);
    p.ey.push_back(ey);
    p.threshold.push_back(-kTolerance * std::sqrt(ex * ex + ey * ey));
  }
  return p;
}

void circle_scalar(const CircleParams& c, Batch b) {
  for (std::size_t i = 0; i < b.n; ++i) {
    const double dx = b.xs[i] - c.cx;
    const double dy = b.ys[i] - c.cy;
    b.out[i] = std::sqrt(dx * dx + dy * dy) <= c.limit ? 1 : 0;
  }
}

void strip_scalar(const StripParams& s, Batch b) {
  for (std::size_t i = 0; i < b.n; ++i) {
    const double px = b.xs[i];
    const double py = b.ys[i];
    double t = 0.0;
    if (s.len2 > 0.0) {
      t = ((px - s.ax) * s.ex + (py - s.ay) * s.ey) / s.len2;
      t = std::min(std::max(t, 0.0), 1.0);
    }
    const double dx = px - (s.ax + t * s.ex);
    const double dy = py - (s.ay + t * s.ey);
    b.out[i] = std::sqrt(dx * dx + dy * dy) <= s.limit ? 1 : 0;
  }
}

void polygon_scalar(const PolygonParams& poly, Batch b) {
  const std::size_t edges = poly.ax.size();
  for (std::size_t i = 0; i < b.n; ++i) {
    const double px = b.xs[i];
    const double py = b.ys[i];
    std::uint8_t inside = 1;
    for (std::size_t e = 0; e < edges; ++e) {
      const double c = poly.ex[e] * (py - poly.ay[e]) - poly.ey[e] * (px - poly.ax[e]);
      if (c < poly.threshold[e]) {
        inside = 0;
        break;
      }
    }
    b.out[i] = inside;
  }
}

}  // namespace movable::kernels::detail
