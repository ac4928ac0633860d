#include "polytangent/predicates.hpp"

#include <algorithm>

namespace polytangent {

bool in_left_half_plane(const Point& a, const Point& b, const Point& c) {
  if (a == b) throw DegenerateGeometryError("half-plane of a degenerate line");
  return orient(a, b, c) != Sign::kNegative;
}

bool in_right_half_plane(const Point& a, const Point& b, const Point& c) {
  return in_left_half_plane(b, a, c);
}

bool on_segment(const Point& a, const Point& b, const Point& c) {
  if (orient(a, b, c) != Sign::kZero) return false;
  return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s) {
  if (p == q || r == s) throw DegenerateGeometryError("zero-length segment");
  const int d1 = to_int(orient(p, q, r));
  const int d2 = to_int(orient(p, q, s));
  const int d3 = to_int(orient(r, s, p));
  const int d4 = to_int(orient(r, s, q));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(p, q, r) || on_segment(p, q, s) || on_segment(r, s, p) ||
         on_segment(r, s, q);
}

}  // namespace polytangent
