#include "polytangent/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace polytangent::io {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_integer(const Line& line, std::string_view tok) {
  std::int64_t v = 0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line.number, "coordinate overflow: " + std::string(tok));
  }
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  if (!Point::in_bounds(v)) {
    throw ParseError(line.number, "coordinate overflow: " + std::string(tok) +
                                      " exceeds the bound 2^30");
  }
  return v;
}

double parse_real(const Line& line, std::string_view tok) {
  double v = 0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw ParseError(line.number, "expected a number, got '" + std::string(tok) + "'");
  }
  return v;
}

struct Block {
  std::size_t line;
  std::string name;
  Orientation declared;
  std::vector<Point> corners;
  std::vector<std::size_t> corner_lines;
};

// Shared reader for the integer and the floating-point layout; `coordinate`
// turns one token into a grid value.
template <class ToGrid>
std::vector<Block> read_blocks(std::string_view text, ToGrid&& coordinate) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().text != kHeader) {
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "expected header '" + std::string(kHeader) + "'");
  }
  std::vector<Block> blocks;
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& head = lines[i];
    const auto tok = tokens(head.text);
    if (tok.size() != 4 || tok[0] != "poly") {
      throw ParseError(head.number, "expected 'poly <name> <n> <ccw|cw>'");
    }
    Block block{head.number, std::string(tok[1]), Orientation::kCounterClockwise, {}, {}};
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), n);
    if (ec != std::errc{} || ptr != tok[2].data() + tok[2].size() || n < 3) {
      throw ParseError(head.number, "corner count must be an integer >= 3");
    }
    if (tok[3] == "ccw") {
      block.declared = Orientation::kCounterClockwise;
    } else if (tok[3] == "cw") {
      block.declared = Orientation::kClockwise;
    } else {
      throw ParseError(head.number, "orientation must be 'ccw' or 'cw'");
    }
    ++i;
    for (std::int64_t c = 0; c < n; ++c, ++i) {
      if (i >= lines.size()) {
        throw ParseError(head.number, "polygon '" + block.name + "' declares " +
                                          std::to_string(n) + " corners but the file ends");
      }
      const auto xy = tokens(lines[i].text);
      if (xy.size() != 2) throw ParseError(lines[i].number, "expected '<x> <y>'");
      block.corners.emplace_back(coordinate(lines[i], xy[0]), coordinate(lines[i], xy[1]));
      block.corner_lines.push_back(lines[i].number);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void check_consecutive_distinct(const Block& b) {
  for (std::size_t k = 0; k < b.corners.size(); ++k) {
    const std::size_t next = (k + 1) % b.corners.size();
    if (b.corners[k] == b.corners[next]) {
      std::ostringstream os;
      os << "polygon '" << b.name << "' repeats corner " << b.corners[k] << " at positions " << k
         << " and " << next;
      throw ParseError(b.corner_lines[std::max(k, next)], os.str());
    }
  }
}

void check_orientation(const Block& b) {
  const Wide area =
      signed_area_times_two(PolygonView(b.corners, Orientation::kCounterClockwise));
  if (area == 0) throw ParseError(b.line, "polygon '" + b.name + "' has zero area");
  const Orientation actual = area > 0 ? Orientation::kCounterClockwise : Orientation::kClockwise;
  if (actual != b.declared) {
    throw ParseError(b.line, "orientation mismatch: polygon '" + b.name + "' is declared " +
                                 std::string(to_string(b.declared)) + " but its corners run " +
                                 std::string(to_string(actual)));
  }
}

}  // namespace

std::vector<Polygon> parse(std::string_view text) {
  std::vector<Block> blocks = read_blocks(text, parse_integer);
  std::vector<Polygon> out;
  out.reserve(blocks.size());
  for (Block& b : blocks) {
    check_consecutive_distinct(b);
    check_orientation(b);
    out.emplace_back(std::move(b.name), std::move(b.corners), b.declared);
  }
  return out;
}

std::string serialize(std::span<const Polygon> polygons) {
  std::ostringstream os;
  os << kHeader << '\n';
  for (const Polygon& p : polygons) {
    os << "poly " << p.name() << ' ' << p.size() << ' ' << to_string(p.orientation()) << '\n';
    for (const Point& c : p.corners()) os << c.x() << ' ' << c.y() << '\n';
  }
  return os.str();
}

FloatImport import_float(std::string_view text, std::int64_t scale) {
  if (scale <= 0) throw ParseError(0, "scale must be positive");
  const double factor = static_cast<double>(scale);
  const auto snap = [factor](const Line& line, std::string_view tok) {
    const double v = std::round(parse_real(line, tok) * factor);
    if (!(std::fabs(v) <= static_cast<double>(kCoordinateLimit))) {
      throw ParseError(line.number, "coordinate overflow after scaling: " + std::string(tok));
    }
    return static_cast<std::int64_t>(v);
  };
  std::vector<Block> blocks = read_blocks(text, snap);
  FloatImport result;
  for (Block& b : blocks) {
    const std::vector<EdgePair> bad =
        simplicity_violations(PolygonView(b.corners, b.declared), 16);
    if (!bad.empty()) {
      std::ostringstream os;
      os << "polygon '" << b.name << "' is not simple after snapping; offending edges:";
      for (const EdgePair& e : bad) os << " (" << e.first << ", " << e.second << ")";
      throw ParseError(b.line, os.str());
    }
    check_orientation(b);
    result.polygons.emplace_back(std::move(b.name), std::move(b.corners), b.declared);
  }
  if (result.polygons.size() >= 2) {
    result.report = check_general_position(result.polygons[0].view(), result.polygons[1].view());
  }
  return result;
}

std::vector<Polygon> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, std::span<const Polygon> polygons) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << serialize(polygons);
}

}  // namespace polytangent::io
