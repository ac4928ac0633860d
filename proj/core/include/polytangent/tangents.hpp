#ifndef POLYTANGENT_TANGENTS_HPP
#define POLYTANGENT_TANGENTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>

#include "polytangent/point.hpp"
#include "polytangent/polygon.hpp"
#include "polytangent/predicates.hpp"

// Common tangents of two simple polygons in linear time and constant
// workspace.
//
// Both algorithms keep a "temporary line" through one corner of each polygon,
// given by the indices (s0, s1), and walk the polygons in alternation with the
// indices t0 and t1. A corner found strictly on the wrong side of the
// temporary line becomes the new s of its polygon, and the other polygon's
// walk restarts just after its own s. Indices are never reduced while the
// algorithm runs: the loop guards (3n resp. 2n) and the 2n abort test refer to
// the unreduced values. Only the returned result is taken mod n.
//
// Workspace is the AlgState below plus RunStats. Corners are read only
// through CornerSequence::corner(i); nothing is allocated.

namespace polytangent {

class OrientationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TangentKind { kSeparating, kOuter };

enum class TangentStatus {
  kFound,
  // The convex hulls intersect, so no separating common tangent exists.
  kNotSeparable,
  // The outer-tangent algorithm produced a line that fails the side
  // certificate (or overran its iteration bound). Only possible when the
  // hulls were not disjoint.
  kPreconditionUncertain,
};

[[nodiscard]] constexpr std::string_view to_string(TangentKind k) {
  return k == TangentKind::kSeparating ? "separating" : "outer";
}

[[nodiscard]] constexpr std::string_view to_string(TangentStatus s) {
  switch (s) {
    case TangentStatus::kFound:
      return "found";
    case TangentStatus::kNotSeparable:
      return "not-separable";
    case TangentStatus::kPreconditionUncertain:
      return "precondition-uncertain";
  }
  return "unknown";
}

/// The complete working state of one run.
struct AlgState {
  std::int64_t s0 = 0;
  std::int64_t t0 = 1;
  std::int64_t s1 = 0;
  std::int64_t t1 = 1;
  int u = 0;

  [[nodiscard]] std::int64_t s(int k) const { return k == 0 ? s0 : s1; }
  [[nodiscard]] std::int64_t t(int k) const { return k == 0 ? t0 : t1; }
  std::int64_t& s(int k) { return k == 0 ? s0 : s1; }
  std::int64_t& t(int k) { return k == 0 ? t0 : t1; }

  friend bool operator==(const AlgState&, const AlgState&) = default;
};

struct RunStats {
  std::int64_t iterations = 0;
  std::int64_t corner_reads = 0;
  std::int64_t updates = 0;
  // Some orient() evaluation during the run returned 0, so the input is not
  // in general position and the correctness guarantee does not apply.
  bool general_position_violated = false;
  // Outer tangents only: the loop reached 4(n0 + n1) iterations.
  bool iteration_cap_hit = false;
};

// Worst-case loop iterations and corner reads. Each iteration reads three
// corners; the outer walk adds a final sweep of n0 + n1 + 2 reads.
[[nodiscard]] constexpr std::int64_t separating_iteration_bound(std::int64_t n0, std::int64_t n1) {
  return 5 * (n0 + n1);
}
[[nodiscard]] constexpr std::int64_t outer_iteration_bound(std::int64_t n0, std::int64_t n1) {
  return 4 * (n0 + n1);
}
[[nodiscard]] constexpr std::int64_t separating_read_bound(std::int64_t n0, std::int64_t n1) {
  return 15 * (n0 + n1) + 16;
}
[[nodiscard]] constexpr std::int64_t outer_read_bound(std::int64_t n0, std::int64_t n1) {
  return 12 * (n0 + n1) + n0 + n1 + 16;
}

/// Sizes of everything a run keeps besides the read-only input.
inline constexpr std::size_t kWorkspaceBytes = sizeof(AlgState) + sizeof(RunStats);

/// One loop iteration, emitted after the iteration's updates. `state` uses the
/// run's own indexing, which for the second-tangent variants is the indexing
/// of the reversed (and, for outer tangents, role-swapped) views.
/// corner0/corner1 give the temporary line in the caller's indexing:
/// a corner of P0 and a corner of P1, reduced to [0, n).
struct TraceEvent {
  std::int64_t iteration = 0;
  int polygon = 0;  // the u that was examined in this iteration
  AlgState state;
  bool updated = false;
  std::int64_t corner0 = 0;
  std::int64_t corner1 = 0;
};

/// Default sink: discards everything.
struct NoTrace {
  void operator()(const TraceEvent&) const {}
};

struct TangentResult {
  TangentStatus status = TangentStatus::kFound;
  TangentKind kind = TangentKind::kSeparating;
  // Corner of P0 and corner of P1 on the tangent, in [0, n0) and [0, n1).
  // -1 when no tangent is reported.
  std::int64_t s0 = -1;
  std::int64_t s1 = -1;
  RunStats stats;

  [[nodiscard]] bool found() const { return status == TangentStatus::kFound; }
};

namespace detail {

// Reads through a view while counting.
template <CornerSequence V0, CornerSequence V1>
class CountingReader {
 public:
  CountingReader(const V0& p0, const V1& p1, RunStats& stats)
      : p0_(p0), p1_(p1), stats_(stats) {}

  Point operator()(int k, std::int64_t i) const {
    ++stats_.corner_reads;
    return k == 0 ? p0_.corner(i) : p1_.corner(i);
  }

 private:
  const V0& p0_;
  const V1& p1_;
  RunStats& stats_;
};

// Maps (run index of polygon 0, run index of polygon 1) to the caller's
// (P0 corner, P1 corner).
struct IdentityMap {
  std::int64_t n0, n1;
  std::pair<std::int64_t, std::int64_t> operator()(std::int64_t a, std::int64_t b) const {
    return {wrap_index(a, n0), wrap_index(b, n1)};
  }
};

struct ReversedMap {
  std::int64_t n0, n1;
  std::pair<std::int64_t, std::int64_t> operator()(std::int64_t a, std::int64_t b) const {
    return {wrap_index(-a, n0), wrap_index(-b, n1)};
  }
};

// The run's polygon 0 is reversed P1 and its polygon 1 is reversed P0.
struct ReversedSwappedMap {
  std::int64_t n0, n1;  // sizes of the caller's P0 and P1
  std::pair<std::int64_t, std::int64_t> operator()(std::int64_t a, std::int64_t b) const {
    return {wrap_index(-b, n0), wrap_index(-a, n1)};
  }
};

// t has wrapped around onto s; the test then compares a corner with itself.
constexpr bool same_corner(std::int64_t s, std::int64_t t, std::int64_t n) {
  return (t - s) % n == 0;
}

inline void require(Orientation actual, Orientation wanted, std::string_view what) {
  if (actual != wanted) {
    throw OrientationError(std::string(what) + " must be declared " +
                           std::string(to_string(wanted)));
  }
}

// Separating common tangent over two counterclockwise views. `side` is the
// sign that triggers an update: +1 as written for counterclockwise input,
// -1 for the mirrored run over clockwise input.
template <CornerSequence V0, CornerSequence V1, class Map, class Sink>
TangentResult separating_run(const V0& p0, const V1& p1, Sign side, const Map& map,
                             Sink&& sink) {
  TangentResult result;
  result.kind = TangentKind::kSeparating;
  RunStats& stats = result.stats;
  const CountingReader<V0, V1> read(p0, p1, stats);
  const std::int64_t n[2] = {p0.size(), p1.size()};

  AlgState st;
  while (st.t0 < 3 * n[0] || st.t1 < 3 * n[1]) {
    const int u = st.u;
    const int v = 1 - u;
    // P_u has finished its third pass. Any positive test from here on would
    // have t_u >= 2n_u, and the other walk re-checks every corner against the
    // final line anyway, so the step is skipped. Without this an unbalanced
    // pair (n1 >> n0) spends two iterations per corner of P1 and overruns
    // 5(n0 + n1).
    if (st.t(u) >= 3 * n[u]) {
      st.u = v;
      continue;
    }
    ++stats.iterations;
    const Sign sign = orient(read(v, st.s(v)), read(u, st.s(u)), read(u, st.t(u)));
    if (sign == Sign::kZero && !same_corner(st.s(u), st.t(u), n[u])) {
      stats.general_position_violated = true;
    }
    bool updated = false;
    if (sign == side) {
      if (st.t(u) >= 2 * n[u]) {
        result.status = TangentStatus::kNotSeparable;
        return result;
      }
      st.s(u) = st.t(u);
      st.t(v) = st.s(v) + 1;
      ++stats.updates;
      updated = true;
    }
    ++st.t(u);
    st.u = v;
    const auto [c0, c1] = map(st.s0, st.s1);
    sink(TraceEvent{stats.iterations, u, st, updated, c0, c1});
  }
  std::tie(result.s0, result.s1) = map(st.s0, st.s1);
  return result;
}

// Outer common tangent over a counterclockwise P0 and a clockwise P1 whose
// convex hulls are disjoint. After the loop the side certificate is checked
// over every corner; failure means the precondition did not hold.
template <CornerSequence V0, CornerSequence V1, class Map, class Sink>
TangentResult outer_run(const V0& p0, const V1& p1, const Map& map, Sink&& sink) {
  TangentResult result;
  result.kind = TangentKind::kOuter;
  RunStats& stats = result.stats;
  const CountingReader<V0, V1> read(p0, p1, stats);
  const std::int64_t n[2] = {p0.size(), p1.size()};
  // Under disjoint hulls the loop ends within this many iterations; going
  // past it proves the hulls overlap.
  const std::int64_t cap = outer_iteration_bound(n[0], n[1]);

  AlgState st;
  while (st.t0 < 2 * n[0] || st.t1 < 2 * n[1]) {
    if (stats.iterations == cap) {
      stats.iteration_cap_hit = true;
      result.status = TangentStatus::kPreconditionUncertain;
      return result;
    }
    const int u = st.u;
    const int v = 1 - u;
    ++stats.iterations;
    const Sign sign = orient(read(0, st.s0), read(1, st.s1), read(u, st.t(u)));
    if (sign == Sign::kZero && !same_corner(st.s(u), st.t(u), n[u])) {
      stats.general_position_violated = true;
    }
    bool updated = false;
    if (sign == Sign::kPositive) {
      st.s(u) = st.t(u);
      st.t(v) = st.s(v) + 1;
      ++stats.updates;
      updated = true;
    }
    ++st.t(u);
    st.u = v;
    const auto [c0, c1] = map(st.s0, st.s1);
    sink(TraceEvent{stats.iterations, u, st, updated, c0, c1});
  }

  const Point a = read(0, st.s0);
  const Point b = read(1, st.s1);
  for (int k = 0; k < 2; ++k) {
    for (std::int64_t i = 0; i < n[k]; ++i) {
      if (orient(a, b, read(k, i)) == Sign::kPositive) {
        result.status = TangentStatus::kPreconditionUncertain;
        return result;
      }
    }
  }
  std::tie(result.s0, result.s1) = map(st.s0, st.s1);
  return result;
}

}  // namespace detail

/// Separating common tangent of two counterclockwise simple polygons.
///
/// On success P_k lies in the closed right half-plane of the directed line
/// from corner s_{1-k} of the other polygon to corner s_k of P_k, for k = 0, 1.
/// Returns kNotSeparable exactly when the convex hulls are not disjoint
/// (assuming general position). At most 5(n0 + n1) iterations.
template <CornerSequence V0, CornerSequence V1, class Sink = NoTrace>
TangentResult separating_common_tangent(const V0& p0, const V1& p1, Sink&& sink = {}) {
  detail::require(p0.orientation(), Orientation::kCounterClockwise, "P0");
  detail::require(p1.orientation(), Orientation::kCounterClockwise, "P1");
  return detail::separating_run(p0, p1, Sign::kPositive,
                                detail::IdentityMap{p0.size(), p1.size()},
                                std::forward<Sink>(sink));
}

/// The other separating common tangent: the same walk over both polygons
/// reversed, updating on -1 instead of +1. On success P_k lies in the closed
/// left half-plane of the line from corner s_{1-k} to corner s_k.
template <CornerSequence V0, CornerSequence V1, class Sink = NoTrace>
TangentResult second_separating_tangent(const V0& p0, const V1& p1, Sink&& sink = {}) {
  detail::require(p0.orientation(), Orientation::kCounterClockwise, "P0");
  detail::require(p1.orientation(), Orientation::kCounterClockwise, "P1");
  return detail::separating_run(reversed(p0), reversed(p1), Sign::kNegative,
                                detail::ReversedMap{p0.size(), p1.size()},
                                std::forward<Sink>(sink));
}

/// Outer common tangent of a counterclockwise P0 and a clockwise P1 whose
/// convex hulls are disjoint. On success both polygons lie in the closed right
/// half-plane of the line from corner s0 of P0 to corner s1 of P1. At most
/// 4(n0 + n1) iterations plus one n0 + n1 verification sweep.
template <CornerSequence V0, CornerSequence V1, class Sink = NoTrace>
TangentResult outer_common_tangent(const V0& p0, const V1& p1, Sink&& sink = {}) {
  detail::require(p0.orientation(), Orientation::kCounterClockwise, "P0");
  detail::require(p1.orientation(), Orientation::kClockwise, "P1");
  return detail::outer_run(p0, p1, detail::IdentityMap{p0.size(), p1.size()},
                           std::forward<Sink>(sink));
}

/// The other outer common tangent. Runs the outer walk with the roles of the
/// polygons swapped over their reversals (reversed P1 is counterclockwise,
/// reversed P0 clockwise). On success both polygons lie in the closed left
/// half-plane of the line from corner s0 of P0 to corner s1 of P1.
template <CornerSequence V0, CornerSequence V1, class Sink = NoTrace>
TangentResult second_outer_tangent(const V0& p0, const V1& p1, Sink&& sink = {}) {
  detail::require(p0.orientation(), Orientation::kCounterClockwise, "P0");
  detail::require(p1.orientation(), Orientation::kClockwise, "P1");
  return detail::outer_run(reversed(p1), reversed(p0),
                           detail::ReversedSwappedMap{p0.size(), p1.size()},
                           std::forward<Sink>(sink));
}

/// Whether the convex hulls of two simple polygons are disjoint, in linear
/// time and constant workspace. Either orientation is accepted.
template <CornerSequence V0, CornerSequence V1>
[[nodiscard]] bool hulls_disjoint(const V0& p0, const V1& p1) {
  const bool ccw0 = p0.orientation() == Orientation::kCounterClockwise;
  const bool ccw1 = p1.orientation() == Orientation::kCounterClockwise;
  if (ccw0 && ccw1) return separating_common_tangent(p0, p1).found();
  if (ccw0) return separating_common_tangent(p0, reversed(p1)).found();
  if (ccw1) return separating_common_tangent(reversed(p0), p1).found();
  return separating_common_tangent(reversed(p0), reversed(p1)).found();
}

}  // namespace polytangent

#endif  // POLYTANGENT_TANGENTS_HPP
