#ifndef POLYTANGENT_IO_HPP
#define POLYTANGENT_IO_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polytangent/polygon.hpp"
#include "polytangent/validate.hpp"

// The `polytangent v1` polygon file:
//
//   polytangent v1
//   poly <name> <n> <ccw|cw>
//   <x> <y>            (n lines, decimal integers, |v| <= 2^30)
//   poly ...
//
// LF line endings, single spaces, no trailing whitespace. The parser also
// skips blank lines and lines starting with '#'. The declared orientation
// must match the sign of the area.

namespace polytangent::io {

inline constexpr std::string_view kHeader = "polytangent v1";

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, 0 if not tied to a line.
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] std::vector<Polygon> parse(std::string_view text);

/// Canonical form; parse(serialize(p)) == p.
[[nodiscard]] std::string serialize(std::span<const Polygon> polygons);

struct FloatImport {
  std::vector<Polygon> polygons;
  // General-position report over the first two polygons (empty otherwise).
  // Snapping can create collinear corners; those are reported, not fatal.
  ValidationReport report;
};

/// Same layout with decimal floating-point coordinates. Each coordinate is
/// multiplied by `scale` and rounded to the nearest integer (halves away from
/// zero). A polygon that is no longer simple after snapping is an error naming
/// the offending edges.
[[nodiscard]] FloatImport import_float(std::string_view text, std::int64_t scale);

[[nodiscard]] std::vector<Polygon> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const Polygon> polygons);

}  // namespace polytangent::io

#endif  // POLYTANGENT_IO_HPP
