#ifndef POLYTANGENT_TOOLS_SVG_HPP
#define POLYTANGENT_TOOLS_SVG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytangent/polygon.hpp"

namespace polytangent::cli {

using CornerLine = std::pair<std::int64_t, std::int64_t>;  // (P0 corner, P1 corner)

struct TraceFigure {
  std::string title;
  // Temporary lines in order: the initial one, then one per update.
  std::vector<CornerLine> temporary_lines;
  std::optional<CornerLine> tangent;  // empty when no tangent was found
  std::string outcome;
};

/// SVG 1.1 document. Screen coordinates flip the y axis:
///   sx = x - min_x + margin,  sy = max_y - y + margin
/// so counterclockwise input still reads counterclockwise on screen.
[[nodiscard]] std::string render_trace_svg(const Polygon& p0, const Polygon& p1,
                                           const TraceFigure& figure);

}  // namespace polytangent::cli

#endif  // POLYTANGENT_TOOLS_SVG_HPP
