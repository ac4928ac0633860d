#ifndef POLYTANGENT_VALIDATE_HPP
#define POLYTANGENT_VALIDATE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "polytangent/polygon.hpp"

namespace polytangent {

// Input validation for the algorithms' assumptions (simple polygons, general
// position). Quadratic and cubic; meant for harnesses and the CLI, never
// called by the tangent algorithms themselves.

struct CornerRef {
  int polygon = 0;          // 0 or 1
  std::int64_t index = 0;   // corner index within that polygon

  friend bool operator==(const CornerRef&, const CornerRef&) = default;
};

struct EdgePair {
  std::int64_t first = 0;   // edge i runs from corner i to corner i+1
  std::int64_t second = 0;

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct Violation {
  enum class Kind { kNotSimple, kSharedCorner, kCollinearTriple };
  Kind kind;
  std::vector<CornerRef> corners;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool truncated = false;

  [[nodiscard]] bool ok() const { return violations.empty() && !truncated; }
  [[nodiscard]] std::size_t count(Violation::Kind kind) const;
};

/// Pairs of edges that intersect illegally: non-adjacent edges touching, or
/// adjacent edges sharing more than their common endpoint.
[[nodiscard]] std::vector<EdgePair> simplicity_violations(const PolygonView& polygon,
                                                          std::size_t limit = 64);

[[nodiscard]] bool is_simple(const PolygonView& polygon);

/// Shared corners between the polygons and collinear triples among the
/// distinct points of the union of their corner sets.
[[nodiscard]] ValidationReport check_general_position(
    const PolygonView& p0, const PolygonView& p1,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Simplicity of each polygon, declared-vs-actual orientation, then general
/// position of the pair.
[[nodiscard]] ValidationReport validate_pair(
    const PolygonView& p0, const PolygonView& p1,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace polytangent

#endif  // POLYTANGENT_VALIDATE_HPP
