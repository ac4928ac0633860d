#include "polytangent/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "polytangent/oracle.hpp"
#include "polytangent/predicates.hpp"
#include "polytangent/validate.hpp"

namespace polytangent::gen {

namespace {

constexpr int kAttemptBudget = 2000;
constexpr std::int64_t kMinScale = 64;
constexpr std::int64_t kMaxScale = std::int64_t{1} << 27;

struct Offset {
  std::int64_t dx;
  std::int64_t dy;
};

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Offset& v) { return (v.dy < 0 || (v.dy == 0 && v.dx < 0)) ? 1 : 0; }

Wide cross(const Offset& a, const Offset& b) { return Wide{a.dx} * b.dy - Wide{a.dy} * b.dx; }

bool angle_less(const Offset& a, const Offset& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool has_collinear_triple(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        if (orient(pts[a], pts[b], pts[c]) == Sign::kZero) return true;
      }
    }
  }
  return false;
}

bool pair_in_general_position(const Polygon& p0, const Polygon& p1) {
  if (p0.size() + p1.size() > kGeneralPositionCheckLimit) return true;
  std::vector<Point> all = p0.corners();
  all.insert(all.end(), p1.corners().begin(), p1.corners().end());
  std::vector<Point> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return !has_collinear_triple(all);
}

Point make_point(std::int64_t x, std::int64_t y) {
  if (!Point::in_bounds(x) || !Point::in_bounds(y)) {
    throw GenerationError("generated coordinate out of range; reduce the coordinate scale");
  }
  return Point(x, y);
}

std::int64_t round_to_grid(double v) { return static_cast<std::int64_t>(std::llround(v)); }

double distance_to_segment(const Point& c, const Point& a, const Point& b) {
  const double ax = static_cast<double>(a.x() - c.x());
  const double ay = static_cast<double>(a.y() - c.y());
  const double bx = static_cast<double>(b.x() - c.x());
  const double by = static_cast<double>(b.y() - c.y());
  const double ex = bx - ax;
  const double ey = by - ay;
  const double len2 = ex * ex + ey * ey;
  double t = len2 > 0 ? -(ax * ex + ay * ey) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(ax + t * ex, ay + t * ey);
}

// Largest radius of a disk around `center` inside the star polygon.
double inradius(const Polygon& p, const Point& center) {
  double best = std::numeric_limits<double>::infinity();
  const auto& c = p.corners();
  for (std::size_t i = 0; i < c.size(); ++i) {
    best = std::min(best, distance_to_segment(center, c[i], c[(i + 1) % c.size()]));
  }
  return best;
}

// Thick circular arc: `outer` corners on radius r_outer from angle
// phi + opening to phi + 2pi - opening, then `inner` corners back along
// radius r_inner. Counterclockwise, simple for the parameters used below.
Polygon crescent(Rng& rng, const std::string& name, Point center, std::int64_t outer,
                 std::int64_t inner, double r_outer, double r_inner, double phi,
                 double opening) {
  const double span = 2 * std::numbers::pi - 2 * opening;
  const double d_out = span / static_cast<double>(outer - 1);
  const double d_in = span / static_cast<double>(inner - 1);
  const auto jitter = [&rng](double amplitude) { return (2 * rng.unit() - 1) * amplitude; };
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(outer + inner));
  const auto emit = [&](double angle, double radius) {
    pts.push_back(make_point(center.x() + round_to_grid(radius * std::cos(angle)),
                             center.y() + round_to_grid(radius * std::sin(angle))));
  };
  for (std::int64_t i = 0; i < outer; ++i) {
    emit(phi + opening + static_cast<double>(i) * d_out + jitter(0.1 * d_out),
         r_outer * (1 + jitter(0.03)));
  }
  for (std::int64_t i = 0; i < inner; ++i) {
    emit(phi + 2 * std::numbers::pi - opening - static_cast<double>(i) * d_in +
             jitter(0.1 * d_in),
         r_inner * (1 + jitter(0.03)));
  }
  return Polygon(name, std::move(pts), Orientation::kCounterClockwise);
}

Polygon renamed(const Polygon& p, std::string name) {
  return Polygon(std::move(name), p.corners(), p.orientation());
}

void check_spec(const GenSpec& spec) {
  if (spec.n0 < 3 || spec.n1 < 3) throw GenerationError("n0 and n1 must be at least 3");
  if (spec.coordinate_scale < kMinScale || spec.coordinate_scale > kMaxScale) {
    throw GenerationError("coordinate scale must lie in [64, 2^27]");
  }
  if (spec.regime == Regime::kDisjointPolygonsOverlappingHulls && spec.n0 < 10) {
    throw GenerationError("the crescent template needs n0 >= 10");
  }
}

std::pair<Polygon, Polygon> disjoint_hulls(const GenSpec& spec) {
  Rng layout(mix_seed(spec.seed, 0));
  const std::int64_t r = spec.coordinate_scale;
  const std::int64_t r1 = layout.uniform(r / 4, r);
  const double theta = 2 * std::numbers::pi * layout.unit();
  const std::int64_t gap = layout.uniform(1, r / 2);
  // +2 absorbs rounding of the direction vector.
  const double d = static_cast<double>(r + r1 + gap + 2);
  const Point c0(layout.uniform(-r / 8, r / 8), layout.uniform(-r / 8, r / 8));
  const Point c1 = make_point(c0.x() + round_to_grid(d * std::cos(theta)),
                              c0.y() + round_to_grid(d * std::sin(theta)));
  for (std::uint64_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
    Polygon p0 = random_star_polygon(mix_seed(spec.seed, 1 + 2 * attempt), spec.n0, c0, r / 2, r);
    Polygon p1 =
        random_star_polygon(mix_seed(spec.seed, 2 + 2 * attempt), spec.n1, c1, r1 / 2, r1);
    if (pair_in_general_position(p0, p1)) return {renamed(p0, "P0"), renamed(p1, "P1")};
  }
  throw GenerationError("could not place a disjoint-hulls pair in general position");
}

std::pair<Polygon, Polygon> intersecting_hulls(const GenSpec& spec) {
  Rng layout(mix_seed(spec.seed, 0));
  const std::int64_t r = spec.coordinate_scale;
  const std::int64_t r1 = layout.uniform(r / 4, r);
  const double theta = 2 * std::numbers::pi * layout.unit();
  const double d = static_cast<double>(layout.uniform(0, r / 4 + r1 / 4));
  const Point c0(0, 0);
  const Point c1 = make_point(round_to_grid(d * std::cos(theta)), round_to_grid(d * std::sin(theta)));
  for (std::uint64_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
    Polygon p0 = random_star_polygon(mix_seed(spec.seed, 1 + 2 * attempt), spec.n0, c0, r / 2, r);
    Polygon p1 =
        random_star_polygon(mix_seed(spec.seed, 2 + 2 * attempt), spec.n1, c1, r1 / 2, r1);
    if (!pair_in_general_position(p0, p1)) continue;
    if (oracle::hulls_disjoint_bruteforce(p0.view(), p1.view())) continue;
    return {renamed(p0, "P0"), renamed(p1, "P1")};
  }
  throw GenerationError("could not place an intersecting-hulls pair in general position");
}

std::pair<Polygon, Polygon> nested_hulls(const GenSpec& spec) {
  Rng layout(mix_seed(spec.seed, 0));
  const std::int64_t r = spec.coordinate_scale;
  const Point c0(0, 0);
  for (std::uint64_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
    Polygon p0 = random_star_polygon(mix_seed(spec.seed, 1 + 2 * attempt), spec.n0, c0, r / 2, r);
    const double rho = inradius(p0, c0);
    const auto r1 = static_cast<std::int64_t>(0.85 * rho);
    if (r1 < 16) continue;
    const std::int64_t wiggle = static_cast<std::int64_t>(rho / 20);
    const Point c1(layout.uniform(-wiggle, wiggle), layout.uniform(-wiggle, wiggle));
    Polygon p1 =
        random_star_polygon(mix_seed(spec.seed, 2 + 2 * attempt), spec.n1, c1, r1 / 2, r1);
    if (!pair_in_general_position(p0, p1)) continue;
    return {renamed(p0, "P0"), renamed(p1, "P1")};
  }
  throw GenerationError("could not place a nested-hulls pair in general position");
}

std::pair<Polygon, Polygon> overlapping_crescents(const GenSpec& spec) {
  Rng layout(mix_seed(spec.seed, 0));
  const double r = static_cast<double>(spec.coordinate_scale);
  const double phi = 2 * std::numbers::pi * layout.unit();
  const double opening = std::numbers::pi / 4;
  const std::int64_t inner0 = std::max<std::int64_t>(6, (spec.n0 + 1) / 2);
  const std::int64_t outer0 = spec.n0 - inner0;
  const Point center(0, 0);
  // P1 stays inside this disk: clear of P0's inner chords and well inside the
  // chord closing P0's opening, so P1 is in the hull of P0 but not in P0.
  const double rho = 0.75 * (r / 2);
  for (std::uint64_t attempt = 0; attempt < kAttemptBudget; ++attempt) {
    Rng rng0(mix_seed(spec.seed, 1 + 2 * attempt));
    Polygon p0 = crescent(rng0, "P0", center, outer0, inner0, r, r / 2, phi, opening);
    std::optional<Polygon> p1;
    if (spec.n1 >= 10) {
      Rng rng1(mix_seed(spec.seed, 2 + 2 * attempt));
      const std::int64_t inner1 = std::max<std::int64_t>(6, (spec.n1 + 1) / 2);
      p1 = crescent(rng1, "P1", center, spec.n1 - inner1, inner1, 0.9 * rho, 0.45 * rho,
                    phi + std::numbers::pi, opening);
    } else {
      p1 = renamed(random_star_polygon(mix_seed(spec.seed, 2 + 2 * attempt), spec.n1, center,
                                       static_cast<std::int64_t>(0.45 * rho),
                                       static_cast<std::int64_t>(0.9 * rho)),
                   "P1");
    }
    if (!is_simple(p0.view()) || !is_simple(p1->view())) continue;
    if (!pair_in_general_position(p0, *p1)) continue;
    if (!oracle::polygons_disjoint(p0.view(), p1->view())) continue;
    if (oracle::hulls_disjoint_bruteforce(p0.view(), p1->view())) continue;
    return {std::move(p0), std::move(*p1)};
  }
  throw GenerationError("could not build an interlocking crescent pair");
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kDisjointHulls:
      return "disjoint";
    case Regime::kIntersectingHulls:
      return "intersecting";
    case Regime::kNestedHulls:
      return "nested";
    case Regime::kDisjointPolygonsOverlappingHulls:
      return "overlapping-hulls";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : {Regime::kDisjointHulls, Regime::kIntersectingHulls, Regime::kNestedHulls,
                   Regime::kDisjointPolygonsOverlappingHulls}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw GenerationError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = span * (std::numeric_limits<std::uint64_t>::max() / span);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Polygon random_star_polygon(std::uint64_t seed, std::int64_t n, Point center, std::int64_t r_min,
                            std::int64_t r_max) {
  if (n < 3) throw GenerationError("a star polygon needs n >= 3");
  if (r_min <= 0 || r_min >= r_max) throw GenerationError("need 0 < r_min < r_max");
  if (!Point::in_bounds(center.x() - r_max) || !Point::in_bounds(center.x() + r_max) ||
      !Point::in_bounds(center.y() - r_max) || !Point::in_bounds(center.y() + r_max)) {
    throw GenerationError("star polygon would leave the coordinate range");
  }
  Rng rng(seed);
  const Wide lo2 = Wide{r_min} * r_min;
  const Wide hi2 = Wide{r_max} * r_max;
  const auto draw = [&] {
    Offset o;
    do {
      o = {rng.uniform(-r_max, r_max), rng.uniform(-r_max, r_max)};
    } while (Wide{o.dx} * o.dx + Wide{o.dy} * o.dy < lo2 ||
             Wide{o.dx} * o.dx + Wide{o.dy} * o.dy > hi2);
    return o;
  };
  const auto same_ray = [](const Offset& a, const Offset& b) {
    return cross(a, b) == 0 && half_plane(a) == half_plane(b);
  };
  std::vector<Offset> offsets;
  offsets.reserve(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    offsets.clear();
    // Corners on a common ray from the center are redrawn. An annulus with
    // fewer than n distinct rays never fills up, hence the round limit.
    for (int round = 0; round < kAttemptBudget && static_cast<std::int64_t>(offsets.size()) < n;
         ++round) {
      while (static_cast<std::int64_t>(offsets.size()) < n) offsets.push_back(draw());
      std::sort(offsets.begin(), offsets.end(), angle_less);
      offsets.erase(std::unique(offsets.begin(), offsets.end(), same_ray), offsets.end());
    }
    if (static_cast<std::int64_t>(offsets.size()) < n) break;
    bool ok = true;
    for (std::size_t i = 0; i < offsets.size() && ok; ++i) {
      // Every angular gap below pi.
      ok = cross(offsets[i], offsets[(i + 1) % offsets.size()]) > 0;
    }
    if (!ok) continue;
    std::vector<Point> pts;
    pts.reserve(offsets.size());
    for (const Offset& o : offsets) pts.emplace_back(center.x() + o.dx, center.y() + o.dy);
    if (n <= kGeneralPositionCheckLimit && has_collinear_triple(pts)) continue;
    return Polygon("P", std::move(pts), Orientation::kCounterClockwise);
  }
  throw GenerationError("star polygon rejection budget exhausted (n=" + std::to_string(n) +
                        ", r in [" + std::to_string(r_min) + ", " + std::to_string(r_max) + "])");
}

std::pair<Polygon, Polygon> generate_pair(const GenSpec& spec) {
  check_spec(spec);
  switch (spec.regime) {
    case Regime::kDisjointHulls:
      return disjoint_hulls(spec);
    case Regime::kIntersectingHulls:
      return intersecting_hulls(spec);
    case Regime::kNestedHulls:
      return nested_hulls(spec);
    case Regime::kDisjointPolygonsOverlappingHulls:
      return overlapping_crescents(spec);
  }
  throw GenerationError("unknown regime");
}

}  // namespace polytangent::gen
