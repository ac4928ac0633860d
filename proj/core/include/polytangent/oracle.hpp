#ifndef POLYTANGENT_ORACLE_HPP
#define POLYTANGENT_ORACLE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polytangent/polygon.hpp"

// Brute-force ground truth for the tangent algorithms. Everything here is
// quadratic or worse and allocates freely; it shares nothing with the
// algorithms except the orient() predicate.

namespace polytangent::oracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Convex hull, counterclockwise, without collinear corners.
struct HullPolygon {
  std::vector<Point> corners;
  std::vector<std::int64_t> source_indices;  // index of each hull corner in the input
};

/// Monotone chain. Throws OracleError if all corners are collinear.
[[nodiscard]] HullPolygon convex_hull(const PolygonView& polygon);

/// A line through corner i of P0 and corner j of P1.
struct CornerPair {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const CornerPair&, const CornerPair&) = default;
  friend auto operator<=>(const CornerPair&, const CornerPair&) = default;
};

struct OracleReport {
  std::vector<CornerPair> separating_pairs;  // sorted
  std::vector<CornerPair> outer_pairs;       // sorted
  bool hulls_disjoint = false;
  // False when some corner-pair line passed through a third corner. Only
  // produced with allow_degenerate; the strict oracle throws instead.
  bool general_position = true;
};

struct OracleOptions {
  // Accept inputs with collinear corners. Lines through more than two corners
  // are then reported once, by their smallest corner pair, and tangency uses
  // closed half-planes.
  bool allow_degenerate = false;
};

/// Classifies the line through every corner pair (i, j) by the orient signs of
/// all corners of both polygons. Tangent to both polygons with them on the
/// same side: outer. On opposite sides: separating. hulls_disjoint is computed
/// independently by hulls_disjoint_bruteforce.
[[nodiscard]] OracleReport classify_all_corner_pairs(const PolygonView& p0,
                                                     const PolygonView& p1,
                                                     OracleOptions options = {});

/// No hull edge of one polygon meets a hull edge of the other, and no hull
/// corner of one lies in the other hull.
[[nodiscard]] bool hulls_disjoint_bruteforce(const PolygonView& p0, const PolygonView& p1);

/// Point in or on a counterclockwise convex polygon.
[[nodiscard]] bool hull_contains(const HullPolygon& hull, const Point& p);

/// Both lines pass through the same two points, i.e. the four corners are
/// collinear.
[[nodiscard]] bool same_line(const PolygonView& p0, const PolygonView& p1, CornerPair a,
                             CornerPair b);

/// Every corner of both polygons in the closed right half-plane (side = -1)
/// or closed left half-plane (side = +1) of the line from p0[i] to p1[j].
[[nodiscard]] bool all_corners_on_side(const PolygonView& p0, const PolygonView& p1,
                                       CornerPair line, int side);

/// Point strictly inside or on the boundary of a simple polygon (crossing
/// number with exact boundary test).
[[nodiscard]] bool polygon_contains(const PolygonView& polygon, const Point& p);

/// The two simple polygons share no point.
[[nodiscard]] bool polygons_disjoint(const PolygonView& p0, const PolygonView& p1);

}  // namespace polytangent::oracle

#endif  // POLYTANGENT_ORACLE_HPP
