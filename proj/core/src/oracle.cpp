#include "polytangent/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "polytangent/predicates.hpp"

namespace polytangent::oracle {

namespace {

// The sides corners of one polygon take relative to a line, ignoring
// the corners on the line.
struct SideTally {
  bool left = false;
  bool right = false;
  bool on_line = false;
};

SideTally tally(const PolygonView& poly, const Point& a, const Point& b) {
  SideTally t;
  for (const Point& c : poly.corners()) {
    switch (orient(a, b, c)) {
      case Sign::kPositive:
        t.left = true;
        break;
      case Sign::kNegative:
        t.right = true;
        break;
      case Sign::kZero:
        if (c != a && c != b) t.on_line = true;
        break;
    }
  }
  return t;
}

}  // namespace

HullPolygon convex_hull(const PolygonView& polygon) {
  const auto pts = polygon.corners();
  std::vector<std::int64_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return pts[static_cast<std::size_t>(a)] < pts[static_cast<std::size_t>(b)];
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::int64_t a, std::int64_t b) {
                            return pts[static_cast<std::size_t>(a)] ==
                                   pts[static_cast<std::size_t>(b)];
                          }),
              order.end());

  const auto at = [&](std::int64_t i) { return pts[static_cast<std::size_t>(i)]; };
  std::vector<std::int64_t> chain(2 * order.size());
  std::size_t k = 0;
  for (std::int64_t idx : order) {
    while (k >= 2 && orient(at(chain[k - 2]), at(chain[k - 1]), at(idx)) != Sign::kPositive) --k;
    chain[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && orient(at(chain[k - 2]), at(chain[k - 1]), at(*it)) != Sign::kPositive) {
      --k;
    }
    chain[k++] = *it;
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw OracleError("convex hull is degenerate: all corners collinear");

  HullPolygon hull;
  hull.source_indices = std::move(chain);
  for (std::int64_t i : hull.source_indices) hull.corners.push_back(at(i));
  return hull;
}

bool hull_contains(const HullPolygon& hull, const Point& p) {
  const std::size_t h = hull.corners.size();
  for (std::size_t i = 0; i < h; ++i) {
    if (orient(hull.corners[i], hull.corners[(i + 1) % h], p) == Sign::kNegative) return false;
  }
  return true;
}

bool hulls_disjoint_bruteforce(const PolygonView& p0, const PolygonView& p1) {
  const HullPolygon h0 = convex_hull(p0);
  const HullPolygon h1 = convex_hull(p1);
  const std::size_t m0 = h0.corners.size();
  const std::size_t m1 = h1.corners.size();
  for (std::size_t a = 0; a < m0; ++a) {
    for (std::size_t b = 0; b < m1; ++b) {
      if (segments_intersect(h0.corners[a], h0.corners[(a + 1) % m0], h1.corners[b],
                             h1.corners[(b + 1) % m1])) {
        return false;
      }
    }
  }
  // No boundary contact, so either one hull is strictly inside the other or
  // they are apart; one corner of each decides.
  return !hull_contains(h0, h1.corners.front()) && !hull_contains(h1, h0.corners.front());
}

OracleReport classify_all_corner_pairs(const PolygonView& p0, const PolygonView& p1,
                                       OracleOptions options) {
  OracleReport report;
  const auto c0 = p0.corners();
  const auto c1 = p1.corners();
  for (std::size_t i = 0; i < c0.size(); ++i) {
    for (std::size_t j = 0; j < c1.size(); ++j) {
      const Point a = c0[i];
      const Point b = c1[j];
      if (a == b) {
        if (!options.allow_degenerate) {
          throw OracleError("polygons share corner; general position required");
        }
        report.general_position = false;
        continue;
      }
      const SideTally t0 = tally(p0, a, b);
      const SideTally t1 = tally(p1, a, b);
      if (t0.on_line || t1.on_line) {
        if (!options.allow_degenerate) {
          std::ostringstream os;
          os << "line through P0[" << i << "] " << a << " and P1[" << j << "] " << b
             << " meets a third corner; general position required";
          throw OracleError(os.str());
        }
        report.general_position = false;
      }
      const bool tangent0 = !(t0.left && t0.right);
      const bool tangent1 = !(t1.left && t1.right);
      if (!tangent0 || !tangent1) continue;
      // A simple polygon is never contained in a line, so each polygon has
      // at least one corner strictly off it.
      const bool left0 = t0.left;
      const bool left1 = t1.left;
      const CornerPair pair{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
      auto& bucket = left0 == left1 ? report.outer_pairs : report.separating_pairs;
      const bool duplicate = std::any_of(bucket.begin(), bucket.end(), [&](const CornerPair& q) {
        return same_line(p0, p1, q, pair);
      });
      if (!duplicate) bucket.push_back(pair);
    }
  }
  std::sort(report.separating_pairs.begin(), report.separating_pairs.end());
  std::sort(report.outer_pairs.begin(), report.outer_pairs.end());
  report.hulls_disjoint = hulls_disjoint_bruteforce(p0, p1);
  return report;
}

bool same_line(const PolygonView& p0, const PolygonView& p1, CornerPair a, CornerPair b) {
  const Point a0 = p0.corners()[static_cast<std::size_t>(a.i)];
  const Point a1 = p1.corners()[static_cast<std::size_t>(a.j)];
  const Point b0 = p0.corners()[static_cast<std::size_t>(b.i)];
  const Point b1 = p1.corners()[static_cast<std::size_t>(b.j)];
  return orient(a0, a1, b0) == Sign::kZero && orient(a0, a1, b1) == Sign::kZero;
}

bool all_corners_on_side(const PolygonView& p0, const PolygonView& p1, CornerPair line,
                         int side) {
  const Point a = p0.corners()[static_cast<std::size_t>(line.i)];
  const Point b = p1.corners()[static_cast<std::size_t>(line.j)];
  for (const PolygonView* poly : {&p0, &p1}) {
    for (const Point& c : poly->corners()) {
      if (to_int(orient(a, b, c)) == -side) return false;
    }
  }
  return true;
}

bool polygon_contains(const PolygonView& polygon, const Point& p) {
  const auto pts = polygon.corners();
  const std::size_t n = pts.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = pts[j];
    const Point& b = pts[i];
    if (on_segment(a, b, p)) return true;
    // Half-open rule on y; the orientation sign replaces the division.
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const Sign s = orient(a, b, p);
      const bool upward = b.y() > a.y();
      if ((s == Sign::kPositive) == upward) inside = !inside;
    }
  }
  return inside;
}

bool polygons_disjoint(const PolygonView& p0, const PolygonView& p1) {
  const auto c0 = p0.corners();
  const auto c1 = p1.corners();
  for (std::size_t a = 0; a < c0.size(); ++a) {
    for (std::size_t b = 0; b < c1.size(); ++b) {
      if (segments_intersect(c0[a], c0[(a + 1) % c0.size()], c1[b], c1[(b + 1) % c1.size()])) {
        return false;
      }
    }
  }
  return !polygon_contains(p0, c1.front()) && !polygon_contains(p1, c0.front());
}

}  // namespace polytangent::oracle
