#include "polytangent/validate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polytangent/predicates.hpp"

namespace polytangent {

namespace {

// Edges (a, b) and (b, c) meeting at b overlap beyond b only when they fold
// back onto each other.
bool adjacent_edges_overlap(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c) return true;
  if (orient(a, b, c) != Sign::kZero) return false;
  return on_segment(a, b, c) || on_segment(b, c, a);
}

std::string describe(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::size_t ValidationReport::count(Violation::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::vector<EdgePair> simplicity_violations(const PolygonView& polygon, std::size_t limit) {
  const std::int64_t n = polygon.size();
  const auto pts = polygon.corners();
  const auto at = [&](std::int64_t i) { return pts[static_cast<std::size_t>(wrap_index(i, n))]; };
  std::vector<EdgePair> out;
  for (std::int64_t i = 0; i < n && out.size() < limit; ++i) {
    for (std::int64_t j = i + 1; j < n && out.size() < limit; ++j) {
      const Point a = at(i), b = at(i + 1), c = at(j), d = at(j + 1);
      bool bad = false;
      if (j == i + 1) {
        bad = adjacent_edges_overlap(a, b, d);
      } else if (i == 0 && j == n - 1) {
        bad = adjacent_edges_overlap(c, a, b);
      } else if (a == b || c == d) {
        bad = true;
      } else {
        bad = segments_intersect(a, b, c, d);
      }
      if (bad) out.push_back({i, j});
    }
  }
  return out;
}

bool is_simple(const PolygonView& polygon) { return simplicity_violations(polygon, 1).empty(); }

ValidationReport check_general_position(const PolygonView& p0, const PolygonView& p1,
                                        std::size_t limit) {
  ValidationReport report;
  const auto push = [&](Violation v) {
    if (report.violations.size() >= limit) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back(std::move(v));
    return true;
  };

  // Distinct points of the union, each remembering its first occurrence.
  std::map<Point, CornerRef> first_seen;
  std::vector<std::pair<Point, CornerRef>> distinct;
  const PolygonView* polys[2] = {&p0, &p1};
  for (int k = 0; k < 2; ++k) {
    const auto pts = polys[k]->corners();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const CornerRef ref{k, static_cast<std::int64_t>(i)};
      const auto [it, inserted] = first_seen.emplace(pts[i], ref);
      if (inserted) {
        distinct.emplace_back(pts[i], ref);
      } else if (it->second.polygon != k) {
        if (!push({Violation::Kind::kSharedCorner,
                   {it->second, ref},
                   "corner " + describe(pts[i]) + " appears in both polygons"})) {
          return report;
        }
      }
    }
  }

  const std::size_t m = distinct.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        if (orient(distinct[a].first, distinct[b].first, distinct[c].first) != Sign::kZero) {
          continue;
        }
        if (!push({Violation::Kind::kCollinearTriple,
                   {distinct[a].second, distinct[b].second, distinct[c].second},
                   "collinear corners " + describe(distinct[a].first) + " " +
                       describe(distinct[b].first) + " " + describe(distinct[c].first)})) {
          return report;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_pair(const PolygonView& p0, const PolygonView& p1,
                               std::size_t limit) {
  ValidationReport report;
  const PolygonView* polys[2] = {&p0, &p1};
  for (int k = 0; k < 2; ++k) {
    for (const EdgePair& e : simplicity_violations(*polys[k], 8)) {
      std::ostringstream os;
      os << "polygon " << k << " is not simple: edges " << e.first << " and " << e.second
         << " intersect";
      report.violations.push_back(
          {Violation::Kind::kNotSimple, {{k, e.first}, {k, e.second}}, os.str()});
    }
    const Wide area = signed_area_times_two(polys[k]->without_read_counter());
    const bool ccw = area > 0;
    if (area == 0 || ccw != (polys[k]->orientation() == Orientation::kCounterClockwise)) {
      report.violations.push_back({Violation::Kind::kNotSimple,
                                   {},
                                   "polygon " + std::to_string(k) +
                                       " orientation does not match its declared " +
                                       std::string(to_string(polys[k]->orientation()))});
    }
  }
  if (report.violations.size() >= limit) {
    report.truncated = true;
    return report;
  }
  ValidationReport gp = check_general_position(p0, p1, limit - report.violations.size());
  report.truncated = gp.truncated;
  for (auto& v : gp.violations) report.violations.push_back(std::move(v));
  return report;
}

}  // namespace polytangent
