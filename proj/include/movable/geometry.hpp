#pragma once

// 2-D primitives for covers and hit testing.
//
// Coordinates are pixels with y growing downward (screen convention). Angles
// are radians measured counterclockwise in the math sense, i.e. a positive
// angle turns +x towards +y. All predicates use closed containment with an
// absolute tolerance of kTolerance.

#include <cmath>
#include <numbers>
#include <span>
#include <variant>
#include <vector>

namespace movable {

inline constexpr double kTolerance = 1e-9;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Point {
 public:
  constexpr Point() = default;
  // Throws Error(invalid_argument) on NaN or infinity.
  Point(double x, double y);

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  friend constexpr bool operator==(const Point&, const Point&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

// Points double as displacement vectors.
inline Point operator+(Point a, Point b) { return {a.x() + b.x(), a.y() + b.y()}; }
inline Point operator-(Point a, Point b) { return {a.x() - b.x(), a.y() - b.y()}; }
inline Point operator*(double s, Point a) { return {s * a.x(), s * a.y()}; }
inline double dot(Point a, Point b) { return a.x() * b.x() + a.y() * b.y(); }
inline double cross(Point a, Point b) { return a.x() * b.y() - a.y() * b.x(); }
inline double norm(Point a) { return std::sqrt(a.x() * a.x() + a.y() * a.y()); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Maps [any finite angle] into [0, 2*pi).
double normalize_angle(double angle);

// Local-to-world placement of an object. The local frame is rotated by
// `angle` about `pivot` (a local point, the origin by default) and then
// shifted by `translation`:
//
//   world = translation + pivot + R(angle) * (local - pivot)
//
// With the default pivot the rotation is about the local origin.
struct Transform {
  Point translation;
  double angle = 0.0;  // always kept in [0, 2*pi)
  Point pivot;

  Transform() = default;
  Transform(Point translation_, double angle_, Point pivot_ = {})
      : translation(translation_), angle(normalize_angle(angle_)), pivot(pivot_) {}

  friend bool operator==(const Transform&, const Transform&) = default;
};

Point to_world(const Transform& t, Point local);
Point to_local(const Transform& t, Point world);

// Rotates v by angle about the origin.
Point rotate(Point v, double angle);

class ConvexPolygonShape {
 public:
  // Requires >= 3 vertices, strictly convex, counterclockwise (positive
  // shoelace area), no repeated consecutive vertices. Throws otherwise.
  explicit ConvexPolygonShape(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }

  friend bool operator==(const ConvexPolygonShape&, const ConvexPolygonShape&) = default;

 private:
  std::vector<Point> vertices_;
};

// True when the vertex list satisfies every ConvexPolygonShape invariant.
bool is_strictly_convex_ccw(std::span<const Point> vertices);
double signed_area(std::span<const Point> vertices);
// Area centroid; requires non-zero area.
Point area_centroid(std::span<const Point> vertices);

class CircleShape {
 public:
  CircleShape(Point center, double radius);

  Point center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

  friend bool operator==(const CircleShape&, const CircleShape&) = default;

 private:
  Point center_;
  double radius_;
};

// Segment with rounded ends (capsule). Coincident endpoints are allowed and
// behave exactly like a circle.
class StripShape {
 public:
  StripShape(Point a, Point b, double radius);

  Point endpoint_a() const noexcept { return a_; }
  Point endpoint_b() const noexcept { return b_; }
  double radius() const noexcept { return radius_; }

  friend bool operator==(const StripShape&, const StripShape&) = default;

 private:
  Point a_;
  Point b_;
  double radius_;
};

using Shape = std::variant<ConvexPolygonShape, CircleShape, StripShape>;

double distance_point_segment(Point a, Point b, Point p);

bool contains_polygon(const ConvexPolygonShape& shape, Point p);
bool contains_circle(const CircleShape& shape, Point p);
bool contains_strip(const StripShape& shape, Point p);
bool contains(const Shape& shape, Point p);

}  // namespace movable
