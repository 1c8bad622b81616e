#include "movable/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "movable/error.hpp"

namespace movable {

Point::Point(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::invalid_argument, "point coordinates must be finite");
  }
}

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw Error(ErrorCode::invalid_argument, "angle must be finite");
  }
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value plus 2*pi can round up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Point rotate(Point v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x() * c - v.y() * s, v.x() * s + v.y() * c};
}

Point to_world(const Transform& t, Point local) {
  if (t.angle == 0.0) return t.translation + local;
  return t.translation + t.pivot + rotate(local - t.pivot, t.angle);
}

Point to_local(const Transform& t, Point world) {
  if (t.angle == 0.0) return world - t.translation;
  return t.pivot + rotate(world - t.translation - t.pivot, -t.angle);
}

double signed_area(std::span<const Point> vertices) {
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return 0.5 * twice;
}

Point area_centroid(std::span<const Point> vertices) {
  // Shift to the first vertex to keep the products well conditioned.
  const Point origin = vertices.front();
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point p = vertices[i] - origin;
    const Point q = vertices[(i + 1) % vertices.size()] - origin;
    const double w = cross(p, q);
    twice_area += w;
    cx += (p.x() + q.x()) * w;
    cy += (p.y() + q.y()) * w;
  }
  if (twice_area == 0.0) {
    throw Error(ErrorCode::invalid_argument, "centroid of a zero-area polygon");
  }
  return origin + Point(cx / (3.0 * twice_area), cy / (3.0 * twice_area));
}

bool is_strictly_convex_ccw(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n]) return false;
  }
  // Every turn must be strictly left and the boundary must wind exactly once.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices[(i + 1) % n] - vertices[i];
    const Point e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    const double c = cross(e0, e1);
    if (!(c > 0.0)) return false;
    turning += std::atan2(c, dot(e0, e1));
  }
  return std::abs(turning - kTwoPi) < 1e-6 && signed_area(vertices) > 0.0;
}

ConvexPolygonShape::ConvexPolygonShape(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (!is_strictly_convex_ccw(vertices_)) {
    throw Error(ErrorCode::invalid_argument,
                "polygon must have >= 3 vertices and be strictly convex, counterclockwise");
  }
}

CircleShape::CircleShape(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::invalid_argument, "circle radius must be positive");
  }
}

StripShape::StripShape(Point a, Point b, double radius) : a_(a), b_(b), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::invalid_argument, "strip radius must be positive");
  }
}

namespace {

bool lexicographically_less(Point a, Point b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

}  // namespace

double distance_point_segment(Point a, Point b, Point p) {
  // Fixed endpoint order makes the result exactly symmetric in a and b.
  if (lexicographically_less(b, a)) std::swap(a, b);
  const double ex = b.x() - a.x();
  const double ey = b.y() - a.y();
  const double len2 = ex * ex + ey * ey;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x() - a.x()) * ex + (p.y() - a.y()) * ey) / len2;
    t = std::min(std::max(t, 0.0), 1.0);
  }
  const double dx = p.x() - (a.x() + t * ex);
  const double dy = p.y() - (a.y() + t * ey);
  return std::sqrt(dx * dx + dy * dy);
}

bool contains_polygon(const ConvexPolygonShape& shape, Point p) {
  const auto v = shape.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    const double ex = b.x() - a.x();
    const double ey = b.y() - a.y();
    const double c = ex * (p.y() - a.y()) - ey * (p.x() - a.x());
    if (c < -kTolerance * std::sqrt(ex * ex + ey * ey)) return false;
  }
  return true;
}

bool contains_circle(const CircleShape& shape, Point p) {
  const double dx = p.x() - shape.center().x();
  const double dy = p.y() - shape.center().y();
  return std::sqrt(dx * dx + dy * dy) <= shape.radius() + kTolerance;
}

bool contains_strip(const StripShape& shape, Point p) {
  return distance_point_segment(shape.endpoint_a(), shape.endpoint_b(), p) <=
         shape.radius() + kTolerance;
}

bool contains(const Shape& shape, Point p) {
  return std::visit(
      [p](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ConvexPolygonShape>) {
          return contains_polygon(s, p);
        } else if constexpr (std::is_same_v<S, CircleShape>) {
          return contains_circle(s, p);
        } else {
          return contains_strip(s, p);
        }
      },
      shape);
}

}  // namespace movable
