#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "movable/error.hpp"
#include "movable/geometry.hpp"
#include "../support/oracles.hpp"
#include "../support/sampling.hpp"

namespace movable {
namespace {

const ConvexPolygonShape kUnitSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

TEST(PointTest, RejectsNonFinite) {
  EXPECT_THROW(Point(std::nan(""), 0), Error);
  EXPECT_THROW(Point(0, std::numeric_limits<double>::infinity()), Error);
  EXPECT_NO_THROW(Point(-1e300, 1e300));
}

TEST(DistancePointSegment, Examples) {
  EXPECT_EQ(distance_point_segment({0, 0}, {10, 0}, {5, 3}), 3.0);
  EXPECT_EQ(distance_point_segment({0, 0}, {10, 0}, {0, 0}), 0.0);

  // Closest point is endpoint b; sampled over a million steps of t.
  const double sampled = oracle::sampled_segment_distance({0, 0}, {10, 0}, {11, 1});
  EXPECT_NEAR(sampled, 1.4142135623730951, 1e-12);
  EXPECT_NEAR(distance_point_segment({0, 0}, {10, 0}, {11, 1}), sampled, 1e-12);
}

TEST(DistancePointSegment, DegenerateSegmentIsPointDistance) {
  EXPECT_DOUBLE_EQ(distance_point_segment({2, 2}, {2, 2}, {5, 6}), 5.0);
}

TEST(DistancePointSegment, ExactlySymmetric) {
  sampling::Rng rng(11);
  for (int i = 0; i < 10'000; ++i) {
    const Point a(sampling::uniform(rng, -500, 500), sampling::uniform(rng, -500, 500));
    const Point b(sampling::uniform(rng, -500, 500), sampling::uniform(rng, -500, 500));
    const Point p(sampling::uniform(rng, -800, 800), sampling::uniform(rng, -800, 800));
    ASSERT_EQ(distance_point_segment(a, b, p), distance_point_segment(b, a, p));
  }
}

TEST(DistancePointSegment, AgreesWithLongDoubleOracle) {
  sampling::Rng rng(12);
  for (int i = 0; i < 10'000; ++i) {
    const Point a(sampling::uniform(rng, -500, 500), sampling::uniform(rng, -500, 500));
    const Point b(sampling::uniform(rng, -500, 500), sampling::uniform(rng, -500, 500));
    const Point p(sampling::uniform(rng, -800, 800), sampling::uniform(rng, -800, 800));
    ASSERT_NEAR(distance_point_segment(a, b, p), static_cast<double>(oracle::segment_distance(a, b, p)), 1e-9);
  }
}

TEST(ContainsPolygon, Examples) {
  EXPECT_TRUE(contains_polygon(kUnitSquare, {0.5, 0.5}));
  EXPECT_FALSE(contains_polygon(kUnitSquare, {1.5, 0.5}));
  EXPECT_TRUE(contains_polygon(kUnitSquare, {1.0, 0.5}));
}

TEST(ContainsCircle, Examples) {
  const CircleShape c({0, 0}, 5);
  EXPECT_TRUE(contains_circle(c, {3, 4}));
  EXPECT_TRUE(contains_circle(c, {0, 0}));
  // |p| = sqrt(25.0801) > 5
  EXPECT_GT(std::hypot(3.0, 4.01), 5.0);
  EXPECT_FALSE(contains_circle(c, {3, 4.01}));
}

TEST(ContainsStrip, Examples) {
  const StripShape s({0, 0}, {10, 0}, 2);
  EXPECT_TRUE(contains_strip(s, {5, 1.99}));
  EXPECT_LE(distance_point_segment({0, 0}, {10, 0}, {11, 1}), 2.0);
  EXPECT_TRUE(contains_strip(s, {11, 1}));
  EXPECT_FALSE(contains_strip(s, {-2.1, 0}));
}

TEST(ContainsStrip, DegenerateEqualsCircle) {
  const StripShape strip({3, 4}, {3, 4}, 2.5);
  const CircleShape circle({3, 4}, 2.5);
  sampling::Rng rng(13);
  for (int i = 0; i < 5'000; ++i) {
    const Point p(sampling::uniform(rng, -2, 8), sampling::uniform(rng, 0, 9));
    ASSERT_EQ(contains_strip(strip, p), contains_circle(circle, p));
  }
}

TEST(ShapeInvariants, RejectInvalidConstruction) {
  EXPECT_THROW(CircleShape({0, 0}, 0), Error);
  EXPECT_THROW(StripShape({0, 0}, {1, 0}, -1), Error);
  EXPECT_THROW(ConvexPolygonShape({{0, 0}, {1, 0}}), Error);
  // Clockwise.
  EXPECT_THROW(ConvexPolygonShape({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);
  // Collinear middle vertex is not strictly convex.
  EXPECT_THROW(ConvexPolygonShape({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), Error);
  // Repeated vertex.
  EXPECT_THROW(ConvexPolygonShape({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), Error);
  // Pentagram order winds twice.
  std::vector<Point> star;
  for (int k = 0; k < 5; ++k) {
    const double a = 2 * kTwoPi * k / 5;
    star.emplace_back(std::cos(a), std::sin(a));
  }
  EXPECT_THROW(ConvexPolygonShape{star}, Error);
}

TEST(Transform, ToLocalExamples) {
  const Point a = to_local(Transform({0, 0}, 0), {3, 4});
  EXPECT_EQ(a, Point(3, 4));
  const Point b = to_local(Transform({10, 0}, 0), {13, 4});
  EXPECT_EQ(b, Point(3, 4));

  const Point expected = oracle::rotation_matrix_to_local({0, 0}, std::numbers::pi / 2, {0, 1});
  EXPECT_NEAR(expected.x(), 1.0, 1e-15);
  EXPECT_NEAR(expected.y(), 0.0, 1e-15);
  const Point c = to_local(Transform({0, 0}, std::numbers::pi / 2), {0, 1});
  EXPECT_NEAR(c.x(), expected.x(), 1e-12);
  EXPECT_NEAR(c.y(), expected.y(), 1e-12);
}

TEST(Transform, MatchesRotationMatrixOracle) {
  sampling::Rng rng(14);
  for (int i = 0; i < 10'000; ++i) {
    const Transform t({sampling::uniform(rng, -1000, 1000), sampling::uniform(rng, -1000, 1000)},
                      sampling::uniform(rng, -10, 10));
    const Point w(sampling::uniform(rng, -1000, 1000), sampling::uniform(rng, -1000, 1000));
    const Point got = to_local(t, w);
    const Point want = oracle::rotation_matrix_to_local(t.translation, t.angle, w);
    ASSERT_NEAR(got.x(), want.x(), 1e-9);
    ASSERT_NEAR(got.y(), want.y(), 1e-9);
  }
}

TEST(Transform, RoundTripWithinTolerance) {
  sampling::Rng rng(15);
  for (int i = 0; i < 10'000; ++i) {
    const Transform t({sampling::uniform(rng, -1000, 1000), sampling::uniform(rng, -1000, 1000)},
                      sampling::uniform(rng, -20, 20),
                      {sampling::uniform(rng, -200, 200), sampling::uniform(rng, -200, 200)});
    const Point p(sampling::uniform(rng, -1000, 1000), sampling::uniform(rng, -1000, 1000));
    const Point back = to_local(t, to_world(t, p));
    ASSERT_NEAR(back.x(), p.x(), 1e-9);
    ASSERT_NEAR(back.y(), p.y(), 1e-9);
  }
}

TEST(Transform, AngleNormalizedToHalfOpenRange) {
  EXPECT_EQ(normalize_angle(0.0), 0.0);
  EXPECT_EQ(normalize_angle(kTwoPi), 0.0);
  EXPECT_DOUBLE_EQ(normalize_angle(-std::numbers::pi / 2), 1.5 * std::numbers::pi);
  EXPECT_EQ(normalize_angle(-1e-300), 0.0);
  sampling::Rng rng(16);
  for (int i = 0; i < 10'000; ++i) {
    const double a = normalize_angle(sampling::uniform(rng, -1e4, 1e4));
    ASSERT_GE(a, 0.0);
    ASSERT_LT(a, kTwoPi);
  }
  EXPECT_THROW(normalize_angle(std::nan("")), Error);
}

TEST(ClosedContainment, BoundarySamplesAreInside) {
  sampling::Rng rng(17);
  for (int s = 0; s < 100; ++s) {
    const auto v = sampling::random_convex_polygon(rng);
    const ConvexPolygonShape poly(v);
    for (const Point& p : sampling::polygon_boundary(rng, v, 200)) ASSERT_TRUE(contains_polygon(poly, p));

    const CircleShape circle({sampling::uniform(rng, -100, 100), sampling::uniform(rng, -100, 100)},
                             sampling::uniform(rng, 0.5, 200));
    const StripShape strip({sampling::uniform(rng, -100, 100), sampling::uniform(rng, -100, 100)},
                           {sampling::uniform(rng, -100, 100), sampling::uniform(rng, -100, 100)},
                           sampling::uniform(rng, 0.5, 50));
    const Point axis = strip.endpoint_b() - strip.endpoint_a();
    const Point normal = norm(axis) > 0 ? (1.0 / norm(axis)) * Point(-axis.y(), axis.x()) : Point(0, 1);
    for (int k = 0; k < 200; ++k) {
      const double theta = sampling::uniform(rng, 0, kTwoPi);
      const Point unit(std::cos(theta), std::sin(theta));
      ASSERT_TRUE(contains_circle(circle, circle.center() + circle.radius() * unit));
      // Caps and both long sides of the strip.
      ASSERT_TRUE(contains_strip(strip, strip.endpoint_a() + strip.radius() * unit));
      ASSERT_TRUE(contains_strip(strip, strip.endpoint_b() + strip.radius() * unit));
      const double t = sampling::uniform(rng, 0, 1);
      const Point on_axis = strip.endpoint_a() + t * axis;
      ASSERT_TRUE(contains_strip(strip, on_axis + strip.radius() * normal));
      ASSERT_TRUE(contains_strip(strip, on_axis - strip.radius() * normal));
    }
  }
}

TEST(Centroid, SquareAndTriangle) {
  const std::vector<Point> square{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  EXPECT_EQ(area_centroid(square), Point(2, 2));
  EXPECT_DOUBLE_EQ(signed_area(square), 16.0);
  const std::vector<Point> tri{{0, 0}, {6, 0}, {0, 3}};
  EXPECT_NEAR(area_centroid(tri).x(), 2.0, 1e-12);
  EXPECT_NEAR(area_centroid(tri).y(), 1.0, 1e-12);
}

}  // namespace
}  // namespace movable
