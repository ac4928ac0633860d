#include "polytangent/polygon.hpp"

namespace polytangent {

std::string_view to_string(Orientation o) {
  return o == Orientation::kCounterClockwise ? "ccw" : "cw";
}

Polygon Polygon::with_computed_orientation(std::string name, std::vector<Point> corners) {
  Polygon p(std::move(name), std::move(corners), Orientation::kCounterClockwise);
  const Wide area = signed_area_times_two(p.view());
  if (area == 0) throw std::invalid_argument("polygon '" + p.name_ + "' has zero area");
  if (area < 0) p.orientation_ = Orientation::kClockwise;
  return p;
}

Polygon Polygon::reversed_copy() const {
  std::vector<Point> out;
  out.reserve(corners_.size());
  const PolygonView v = view();
  for (std::int64_t i = 0; i < size(); ++i) out.push_back(v.corner(-i));
  return Polygon(name_, std::move(out), flip(orientation_));
}

}  // namespace polytangent
