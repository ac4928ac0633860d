#ifndef POLYTANGENT_POINT_HPP
#define POLYTANGENT_POINT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polytangent {

/// Largest admissible coordinate magnitude. Cross products are evaluated in
/// 128-bit intermediates, so any bound up to 2^62 would stay exact; 2^30 keeps
/// every coordinate difference and the shoelace sum of a 2^14-gon far from
/// the limits.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

__extension__ typedef __int128 Wide;

class CoordinateError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Exact integer point. The coordinate bound is checked on construction so
/// every predicate downstream is exact.
class Point {
 public:
  constexpr Point() = default;
  constexpr Point(std::int64_t x, std::int64_t y) : x_(x), y_(y) {
    if (!in_bounds(x) || !in_bounds(y)) {
      throw CoordinateError("coordinate exceeds +/-2^30: (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
    }
  }

  [[nodiscard]] constexpr std::int64_t x() const { return x_; }
  [[nodiscard]] constexpr std::int64_t y() const { return y_; }

  [[nodiscard]] static constexpr bool in_bounds(std::int64_t v) {
    return v >= -kCoordinateLimit && v <= kCoordinateLimit;
  }

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;

 private:
  std::int64_t x_ = 0;
  std::int64_t y_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x() << ", " << p.y() << ')';
}

}  // namespace polytangent

#endif  // POLYTANGENT_POINT_HPP
