#ifndef POLYTANGENT_POLYGON_HPP
#define POLYTANGENT_POLYGON_HPP

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polytangent/point.hpp"

namespace polytangent {

enum class Orientation { kCounterClockwise, kClockwise };

[[nodiscard]] constexpr Orientation flip(Orientation o) {
  return o == Orientation::kCounterClockwise ? Orientation::kClockwise
                                             : Orientation::kCounterClockwise;
}

/// "ccw" / "cw", the spelling used by the polygon file format.
[[nodiscard]] std::string_view to_string(Orientation o);

/// i mod n in [0, n) for any sign of i.
[[nodiscard]] constexpr std::int64_t wrap_index(std::int64_t i, std::int64_t n) {
  const std::int64_t r = i % n;
  return r < 0 ? r + n : r;
}

/// Anything the tangent algorithms can read: a cyclic, read-only sequence of
/// corners with a declared orientation. The algorithms touch polygons only
/// through this interface.
template <class V>
concept CornerSequence = requires(const V& v, std::int64_t i) {
  { v.size() } -> std::convertible_to<std::int64_t>;
  { v.corner(i) } -> std::same_as<Point>;
  { v.orientation() } -> std::same_as<Orientation>;
};

/// Non-owning view over a corner array. corner(i) reads corners[i mod n].
/// An optional external counter is bumped on every corner() call; a view
/// carrying a counter must not be shared between concurrent runs.
class PolygonView {
 public:
  PolygonView(std::span<const Point> corners, Orientation declared,
              std::uint64_t* read_counter = nullptr)
      : corners_(corners), orientation_(declared), read_counter_(read_counter) {
    if (corners_.size() < 3) {
      throw std::invalid_argument("a polygon needs at least 3 corners, got " +
                                  std::to_string(corners_.size()));
    }
  }

  [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(corners_.size()); }

  [[nodiscard]] Point corner(std::int64_t i) const {
    if (read_counter_ != nullptr) ++*read_counter_;
    return corners_[static_cast<std::size_t>(wrap_index(i, size()))];
  }

  [[nodiscard]] Orientation orientation() const { return orientation_; }
  [[nodiscard]] std::span<const Point> corners() const { return corners_; }

  [[nodiscard]] PolygonView with_read_counter(std::uint64_t& counter) const {
    return PolygonView(corners_, orientation_, &counter);
  }
  [[nodiscard]] PolygonView without_read_counter() const {
    return PolygonView(corners_, orientation_);
  }

 private:
  std::span<const Point> corners_;
  Orientation orientation_;
  std::uint64_t* read_counter_ = nullptr;
};

/// Presents a view in reversed cyclic order, corner(i) == base.corner(-i),
/// with the declared orientation flipped. Copies nothing but the base view.
template <CornerSequence V>
class ReversedView {
 public:
  explicit ReversedView(V base) : base_(std::move(base)) {}

  [[nodiscard]] std::int64_t size() const { return base_.size(); }
  [[nodiscard]] Point corner(std::int64_t i) const { return base_.corner(-i); }
  [[nodiscard]] Orientation orientation() const { return flip(base_.orientation()); }
  [[nodiscard]] const V& base() const { return base_; }

  /// Index in the base view of this view's corner i.
  [[nodiscard]] std::int64_t base_index(std::int64_t i) const { return wrap_index(-i, size()); }

 private:
  V base_;
};

template <CornerSequence V>
[[nodiscard]] ReversedView<V> reversed(V view) {
  return ReversedView<V>(std::move(view));
}

/// Shoelace sum; positive iff the corners run counterclockwise.
template <CornerSequence V>
[[nodiscard]] Wide signed_area_times_two(const V& polygon) {
  const std::int64_t n = polygon.size();
  Wide sum = 0;
  Point prev = polygon.corner(n - 1);
  for (std::int64_t i = 0; i < n; ++i) {
    const Point cur = polygon.corner(i);
    sum += Wide{prev.x()} * cur.y() - Wide{cur.x()} * prev.y();
    prev = cur;
  }
  return sum;
}

/// Owning polygon, the unit the file format and the generator produce.
class Polygon {
 public:
  Polygon(std::string name, std::vector<Point> corners, Orientation declared)
      : name_(std::move(name)), corners_(std::move(corners)), orientation_(declared) {
    if (corners_.size() < 3) {
      throw std::invalid_argument("a polygon needs at least 3 corners, got " +
                                  std::to_string(corners_.size()));
    }
  }

  /// Orientation taken from the sign of the area. Throws on zero area.
  static Polygon with_computed_orientation(std::string name, std::vector<Point> corners);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<Point>& corners() const { return corners_; }
  [[nodiscard]] Orientation orientation() const { return orientation_; }
  [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(corners_.size()); }

  [[nodiscard]] PolygonView view() const { return PolygonView(corners_, orientation_); }
  [[nodiscard]] PolygonView view(std::uint64_t& read_counter) const {
    return PolygonView(corners_, orientation_, &read_counter);
  }

  /// Same boundary listed the other way round, starting at the same corner:
  /// result.corner(i) == corner(-i).
  [[nodiscard]] Polygon reversed_copy() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::string name_;
  std::vector<Point> corners_;
  Orientation orientation_;
};

}  // namespace polytangent

#endif  // POLYTANGENT_POLYGON_HPP
