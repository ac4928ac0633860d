#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace polytangent::cli {

namespace {

struct Frame {
  std::int64_t min_x, max_y, margin, width, height;

  std::int64_t sx(const Point& p) const { return p.x() - min_x + margin; }
  std::int64_t sy(const Point& p) const { return max_y - p.y() + margin; }
};

Frame frame_for(const Polygon& p0, const Polygon& p1) {
  std::int64_t min_x = p0.corners().front().x(), max_x = min_x;
  std::int64_t min_y = p0.corners().front().y(), max_y = min_y;
  for (const Polygon* p : {&p0, &p1}) {
    for (const Point& c : p->corners()) {
      min_x = std::min(min_x, c.x());
      max_x = std::max(max_x, c.x());
      min_y = std::min(min_y, c.y());
      max_y = std::max(max_y, c.y());
    }
  }
  const std::int64_t span = std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1});
  const std::int64_t margin = std::max<std::int64_t>(span / 20, 1);
  return {min_x, max_y, margin, max_x - min_x + 2 * margin, max_y - min_y + 2 * margin};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void polygon_path(std::ostream& os, const Frame& f, const Polygon& p, const char* id,
                  const char* fill) {
  os << "  <path class=\"polygon\" id=\"" << id << "\" fill=\"" << fill
     << "\" fill-opacity=\"0.35\" stroke=\"#333333\" stroke-width=\"1.5\""
        " vector-effect=\"non-scaling-stroke\" d=\"";
  for (std::size_t i = 0; i < p.corners().size(); ++i) {
    os << (i == 0 ? "M " : " L ") << f.sx(p.corners()[i]) << ' ' << f.sy(p.corners()[i]);
  }
  os << " Z\"/>\n";
}

void line(std::ostream& os, const Frame& f, const Point& a, const Point& b, const char* cls,
          const char* style) {
  os << "  <line class=\"" << cls << "\" x1=\"" << f.sx(a) << "\" y1=\"" << f.sy(a)
     << "\" x2=\"" << f.sx(b) << "\" y2=\"" << f.sy(b) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_trace_svg(const Polygon& p0, const Polygon& p1, const TraceFigure& figure) {
  const Frame f = frame_for(p0, p1);
  const std::int64_t display_width = 800;
  const std::int64_t display_height = std::max<std::int64_t>(1, display_width * f.height / f.width);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << f.width << ' '
     << f.height << "\" width=\"" << display_width << "\" height=\"" << display_height << "\">\n"
     << "  <title>" << escape(figure.title) << "</title>\n"
     << "  <!-- screen x = x - " << f.min_x << " + " << f.margin << ", screen y = " << f.max_y
     << " - y + " << f.margin << " -->\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height
     << "\" fill=\"#ffffff\"/>\n";
  polygon_path(os, f, p0, "P0", "#4c78a8");
  polygon_path(os, f, p1, "P1", "#f58518");
  const auto c0 = [&](std::int64_t i) { return p0.corners()[static_cast<std::size_t>(i)]; };
  const auto c1 = [&](std::int64_t i) { return p1.corners()[static_cast<std::size_t>(i)]; };
  for (const CornerLine& l : figure.temporary_lines) {
    line(os, f, c0(l.first), c1(l.second), "temporary",
         "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\""
         " vector-effect=\"non-scaling-stroke\"");
  }
  if (figure.tangent) {
    line(os, f, c0(figure.tangent->first), c1(figure.tangent->second), "tangent",
         "stroke=\"#d62728\" stroke-width=\"2.5\" vector-effect=\"non-scaling-stroke\"");
  }
  os << "  <text class=\"outcome\" x=\"" << f.margin << "\" y=\"" << f.margin
     << "\" font-family=\"monospace\" font-size=\"" << std::max<std::int64_t>(f.margin / 2, 1)
     << "\">" << escape(figure.outcome) << "</text>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace polytangent::cli
