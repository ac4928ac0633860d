#ifndef POLYTANGENT_PREDICATES_HPP
#define POLYTANGENT_PREDICATES_HPP

#include <stdexcept>

#include "polytangent/point.hpp"

namespace polytangent {

enum class Sign : int { kNegative = -1, kZero = 0, kPositive = 1 };

[[nodiscard]] constexpr int to_int(Sign s) { return static_cast<int>(s); }
[[nodiscard]] constexpr Sign negate(Sign s) { return static_cast<Sign>(-to_int(s)); }

class DegenerateGeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (b - a)^perp . (c - b), exactly.
[[nodiscard]] constexpr Wide turn_value(const Point& a, const Point& b, const Point& c) {
  const Wide abx = Wide{b.x()} - a.x();
  const Wide aby = Wide{b.y()} - a.y();
  const Wide bcx = Wide{c.x()} - b.x();
  const Wide bcy = Wide{c.y()} - b.y();
  return abx * bcy - aby * bcx;
}

/// +1 if c is strictly left of the directed line a->b, 0 if collinear, -1 if
/// strictly right.
[[nodiscard]] constexpr Sign orient(const Point& a, const Point& b, const Point& c) {
  const Wide v = turn_value(a, b, c);
  return v > 0 ? Sign::kPositive : (v < 0 ? Sign::kNegative : Sign::kZero);
}

/// Closed half-plane left of a->b. Throws DegenerateGeometryError if a == b.
[[nodiscard]] bool in_left_half_plane(const Point& a, const Point& b, const Point& c);

/// Closed half-plane right of a->b, i.e. in_left_half_plane(b, a, c).
[[nodiscard]] bool in_right_half_plane(const Point& a, const Point& b, const Point& c);

/// True iff the closed segments pq and rs share a point, including collinear
/// overlap. Throws DegenerateGeometryError for a zero-length segment.
[[nodiscard]] bool segments_intersect(const Point& p, const Point& q, const Point& r,
                                      const Point& s);

/// c lies on the closed segment ab (a == b allowed).
[[nodiscard]] bool on_segment(const Point& a, const Point& b, const Point& c);

}  // namespace polytangent

#endif  // POLYTANGENT_PREDICATES_HPP
