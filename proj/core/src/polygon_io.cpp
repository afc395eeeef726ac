#include "chirality/polygon_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chirality/error.hpp"

namespace chirality {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

bool next_double(std::string_view& s, double& out) {
  std::size_t i = 0;
  while (i < s.size() && is_blank(s[i])) ++i;
  s.remove_prefix(i);
  if (s.empty()) return false;
  // from_chars rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

std::vector<Point2> parse_points(std::istream& in) {
  std::vector<Point2> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    std::size_t i = 0;
    while (i < s.size() && is_blank(s[i])) ++i;
    if (i == s.size()) continue;

    Point2 p;
    double extra = 0.0;
    if (!next_double(s, p.x) || !next_double(s, p.y) || next_double(s, extra) ||
        s.find_first_not_of(" \t\r,") != std::string_view::npos) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected \"x y\", got \"" << line << '"';
      throw Error(ErrorCode::ParseError, msg.str());
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      std::ostringstream msg;
      msg << "line " << lineno << ": non-finite coordinate";
      throw Error(ErrorCode::ParseError, msg.str());
    }
    pts.push_back(p);
  }
  return pts;
}

ConvexPolygon read_polygon(std::istream& in) {
  const std::vector<Point2> pts = parse_points(in);
  return convex_hull(pts);
}

ConvexPolygon read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const ConvexPolygon& k, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const auto old = out.precision(17);
  for (const Point2& v : k.vertices()) out << v.x << ' ' << v.y << '\n';
  out.precision(old);
}

}  // namespace chirality
