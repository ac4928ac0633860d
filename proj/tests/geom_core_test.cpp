#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "polytangent/point.hpp"
#include "polytangent/predicates.hpp"

namespace polytangent {
namespace {

using boost::multiprecision::cpp_int;

Sign reference_orient(const Point& a, const Point& b, const Point& c) {
  const cpp_int v = (cpp_int(b.x()) - a.x()) * (cpp_int(c.y()) - b.y()) -
                    (cpp_int(b.y()) - a.y()) * (cpp_int(c.x()) - b.x());
  return v > 0 ? Sign::kPositive : (v < 0 ? Sign::kNegative : Sign::kZero);
}

TEST(Orient, SmallExamples) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {1, 1}), Sign::kPositive);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {1, -1}), Sign::kNegative);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), Sign::kZero);
}

TEST(Orient, ExtremeCornersOfTheBoundingSquare) {
  const std::int64_t m = kCoordinateLimit;
  EXPECT_EQ(orient({-m, -m}, {m, -m}, {m, m}), Sign::kPositive);
  EXPECT_EQ(orient({m, m}, {-m, m}, {-m, -m}), Sign::kPositive);
  EXPECT_EQ(orient({-m, -m}, {m, m}, {-m, m}), Sign::kPositive);
  EXPECT_EQ(orient({-m, -m}, {0, 0}, {m, m}), Sign::kZero);
  // Near-collinear: the determinant is m while its terms are about 2^60.
  EXPECT_EQ(orient({-m, -m + 1}, {0, 0}, {m, m}), Sign::kPositive);
  EXPECT_EQ(orient({-m + 1, -m}, {0, 0}, {m, m}), Sign::kNegative);
  EXPECT_EQ(turn_value({-m, -m}, {m, m}, {m, -m}), -(Wide{2 * m} * (2 * m)));
}

TEST(Orient, MatchesArbitraryPrecisionNearTheBound) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-kCoordinateLimit, kCoordinateLimit);
  std::uniform_int_distribution<std::int64_t> edge(kCoordinateLimit - 8, kCoordinateLimit);
  for (int i = 0; i < 20000; ++i) {
    const bool extreme = i % 2 == 0;
    auto draw = [&] {
      if (!extreme) return coord(rng);
      const std::int64_t v = edge(rng);
      return (rng() & 1) ? v : -v;
    };
    const Point a(draw(), draw()), b(draw(), draw()), c(draw(), draw());
    ASSERT_EQ(orient(a, b, c), reference_orient(a, b, c)) << a << b << c;
  }
}

TEST(Orient, CyclicAndAntisymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-kCoordinateLimit, kCoordinateLimit);
  for (int i = 0; i < 20000; ++i) {
    const Point a(coord(rng), coord(rng)), b(coord(rng), coord(rng)), c(coord(rng), coord(rng));
    const Sign s = orient(a, b, c);
    ASSERT_EQ(orient(b, c, a), s);
    ASSERT_EQ(orient(c, a, b), s);
    ASSERT_EQ(orient(b, a, c), negate(s));
    ASSERT_EQ(orient(a, c, b), negate(s));
  }
}

TEST(Orient, RepeatedPointIsZero) {
  EXPECT_EQ(orient({3, 4}, {3, 4}, {9, -2}), Sign::kZero);
  EXPECT_EQ(orient({3, 4}, {9, -2}, {9, -2}), Sign::kZero);
}

TEST(Point, RejectsOutOfBoundCoordinates) {
  EXPECT_NO_THROW(Point(kCoordinateLimit, -kCoordinateLimit));
  EXPECT_THROW(Point(kCoordinateLimit + 1, 0), CoordinateError);
  EXPECT_THROW(Point(0, -kCoordinateLimit - 1), CoordinateError);
  EXPECT_THROW(Point(std::int64_t{1} << 62, 0), CoordinateError);
}

TEST(HalfPlane, ClosedSides) {
  const Point a(0, 0), b(4, 0);
  EXPECT_TRUE(in_left_half_plane(a, b, {1, 3}));
  EXPECT_FALSE(in_left_half_plane(a, b, {1, -3}));
  EXPECT_TRUE(in_left_half_plane(a, b, {9, 0}));
  EXPECT_TRUE(in_right_half_plane(a, b, {1, -3}));
  EXPECT_TRUE(in_right_half_plane(a, b, {-5, 0}));
  EXPECT_FALSE(in_right_half_plane(a, b, {1, 3}));
  EXPECT_THROW((void)in_left_half_plane(a, a, {1, 1}), DegenerateGeometryError);
}

TEST(Segments, ProperCrossingTouchingAndDisjoint) {
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 4}, {0, 4}, {4, 0}));
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 0}, {2, 0}, {2, 5}));   // T-junction
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 0}, {4, 0}, {6, 3}));   // shared endpoint
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 0}, {2, 0}, {7, 0}));   // collinear overlap
  EXPECT_FALSE(segments_intersect({0, 0}, {4, 0}, {5, 0}, {7, 0}));  // collinear gap
  EXPECT_FALSE(segments_intersect({0, 0}, {4, 4}, {0, 1}, {3, 4}));  // parallel
  EXPECT_FALSE(segments_intersect({0, 0}, {4, 0}, {2, 1}, {2, 5}));
  EXPECT_THROW((void)segments_intersect({1, 1}, {1, 1}, {0, 0}, {2, 2}), DegenerateGeometryError);
}

TEST(Segments, OnSegment) {
  EXPECT_TRUE(on_segment({0, 0}, {4, 2}, {2, 1}));
  EXPECT_TRUE(on_segment({0, 0}, {4, 2}, {4, 2}));
  EXPECT_FALSE(on_segment({0, 0}, {4, 2}, {6, 3}));
  EXPECT_FALSE(on_segment({0, 0}, {4, 2}, {2, 2}));
}

}  // namespace
}  // namespace polytangent
