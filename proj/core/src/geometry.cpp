#include "chirality/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "chirality/error.hpp"

namespace chirality {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_coordinate(std::span<const Point2> pts) {
  double m = 0.0;
  for (const Point2& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

double signed_area2(std::span<const Point2> v) {
  double s = 0.0;
  const Point2 o = v[0];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) s += cross(v[i] - o, v[i + 1] - o);
  return s;
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::NotATriangleOrParallelogram: return "NotATriangleOrParallelogram";
    case ErrorCode::NotAParallelogram: return "NotAParallelogram";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Axis / ellipse

Axis::Axis(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  theta_ = t;
}

Point2 Axis::reflect(Point2 p) const noexcept {
  const double c = std::cos(2.0 * theta_);
  const double s = std::sin(2.0 * theta_);
  return {c * p.x + s * p.y, s * p.x - c * p.y};
}

double axis_distance(Axis a, Axis b) {
  const double d = std::abs(a.theta() - b.theta());
  return std::min(d, kPi - d);
}

double EllipseSpec::support(Point2 dir) const {
  const Point2 u{std::cos(major_angle), std::sin(major_angle)};
  const double du = dot(dir, u) * semi_major;
  const double dv = dot(dir, perp(u)) * semi_minor;
  return dot(dir, center) + std::hypot(du, dv);
}

double EllipseSpec::gauge_squared(Point2 p) const {
  const Point2 u{std::cos(major_angle), std::sin(major_angle)};
  const Point2 d = p - center;
  const double a = dot(d, u) / semi_major;
  const double b = dot(d, perp(u)) / semi_minor;
  return a * a + b * b;
}

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(Trusted, std::vector<Point2> ccw_vertices)
    : vertices_(std::move(ccw_vertices)) {
  const auto start = std::min_element(vertices_.begin(), vertices_.end(), lex_less);
  std::rotate(vertices_.begin(), start, vertices_.end());
  extent_ = max_abs_coordinate(vertices_);
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::DegenerateInput, "polygon needs at least 3 vertices");
  }
  for (const Point2& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::DegenerateInput, "non-finite vertex coordinate");
    }
  }
  if (signed_area2(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());

  const double scale = max_abs_coordinate(vertices);
  if (scale == 0.0) throw Error(ErrorCode::DegenerateInput, "all vertices at the origin");
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    const Point2 c = vertices[(i + 2) % n];
    if (norm(b - a) <= kGeomEps * scale) {
      throw Error(ErrorCode::DegenerateInput, "consecutive vertices coincide");
    }
    if (cross(b - a, c - b) <= kGeomEps * scale * scale) {
      std::ostringstream msg;
      msg << "polygon is not strictly convex at vertex " << (i + 1) % n;
      throw Error(ErrorCode::DegenerateInput, msg.str());
    }
  }
  if (0.5 * signed_area2(vertices) <= kGeomEps * scale * scale) {
    throw Error(ErrorCode::DegenerateInput, "polygon has no area");
  }
  return ConvexPolygon(Trusted{}, std::move(vertices));
}

double ConvexPolygon::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) d = std::max(d, norm(vertices_[i] - vertices_[j]));
  }
  return d;
}

ConvexPolygon ConvexPolygon::translated(Point2 t) const {
  std::vector<Point2> v(vertices_.begin(), vertices_.end());
  for (Point2& p : v) p = p + t;
  return ConvexPolygon(Trusted{}, std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
  if (!(s > 0.0)) throw Error(ErrorCode::DegenerateInput, "scale factor must be positive");
  std::vector<Point2> v(vertices_.begin(), vertices_.end());
  for (Point2& p : v) p = s * p;
  return ConvexPolygon(Trusted{}, std::move(v));
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point2> v(vertices_.begin(), vertices_.end());
  for (Point2& p : v) p = {c * p.x - s * p.y, s * p.x + c * p.y};
  return ConvexPolygon(Trusted{}, std::move(v));
}

ConvexPolygon ConvexPolygon::negated() const {
  std::vector<Point2> v(vertices_.begin(), vertices_.end());
  for (Point2& p : v) p = -p;
  return ConvexPolygon(Trusted{}, std::move(v));
}

bool ConvexPolygon::approx_equal(const ConvexPolygon& other, double tol) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (norm(vertices_[i] - other.vertices_[i]) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

ConvexPolygon convex_hull(std::span<const Point2> points) {
  if (points.size() < 3) throw Error(ErrorCode::DegenerateInput, "need at least 3 points");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  const double scale = max_abs_coordinate(pts);
  const double tol = kGeomEps * scale * scale;

  // Andrew's monotone chain; pops on non-left turns, which drops collinear
  // and duplicate points.
  std::vector<Point2> hull;
  hull.reserve(2 * pts.size());
  const auto build = [&](auto first, auto last, std::size_t floor) {
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= floor + 2 &&
             cross(hull[hull.size() - 1] - hull[hull.size() - 2], *it - hull[hull.size() - 1]) <= tol) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
  };
  build(pts.begin(), pts.end(), 0);
  const std::size_t lower = hull.size() - 1;
  hull.pop_back();
  build(pts.rbegin(), pts.rend(), lower);
  hull.pop_back();

  if (hull.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  return ConvexPolygon::from_vertices(std::move(hull));
}

ConvexPolygon reflect(const ConvexPolygon& k, Axis axis) {
  const double c = std::cos(2.0 * axis.theta());
  const double s = std::sin(2.0 * axis.theta());
  std::vector<Point2> v(k.vertices().rbegin(), k.vertices().rend());
  for (Point2& p : v) p = {c * p.x + s * p.y, s * p.x - c * p.y};
  return ConvexPolygon::from_vertices(std::move(v));
}

double support(const ConvexPolygon& k, Point2 dir) {
  if (dir.x == 0.0 && dir.y == 0.0) throw Error(ErrorCode::ZeroDirection, "support direction is zero");
  double best = -std::numeric_limits<double>::infinity();
  for (const Point2& v : k.vertices()) best = std::max(best, dot(dir, v));
  return best;
}

std::vector<double> support_sweep(const ConvexPolygon& k, std::span<const Point2> ccw_dirs) {
  std::vector<double> out;
  out.reserve(ccw_dirs.size());
  if (ccw_dirs.empty()) return out;
  const std::size_t n = k.size();
  std::size_t j = 0;
  double best = dot(ccw_dirs[0], k[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double d = dot(ccw_dirs[0], k[i]);
    if (d > best) {
      best = d;
      j = i;
    }
  }
  out.push_back(best);
  for (std::size_t q = 1; q < ccw_dirs.size(); ++q) {
    const Point2 dir = ccw_dirs[q];
    double cur = dot(dir, k[j]);
    for (std::size_t steps = 0; steps < n; ++steps) {
      const std::size_t nxt = (j + 1) % n;
      const double d = dot(dir, k[nxt]);
      if (d <= cur) break;
      cur = d;
      j = nxt;
    }
    out.push_back(cur);
  }
  return out;
}

std::vector<Halfplane> to_halfplanes(const ConvexPolygon& k) {
  std::vector<Halfplane> hp;
  hp.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point2 e = k.edge(i);
    const Point2 n = normalized(Point2{e.y, -e.x});
    hp.push_back({n, dot(n, k[i])});
  }
  return hp;
}

double area(const ConvexPolygon& k) { return 0.5 * signed_area2(k.vertices()); }

Point2 centroid(const ConvexPolygon& k) {
  const Point2 o = k[0];
  double a2 = 0.0;
  Point2 acc;
  for (std::size_t i = 1; i + 1 < k.size(); ++i) {
    const Point2 p = k[i] - o;
    const Point2 q = k[i + 1] - o;
    const double w = cross(p, q);
    a2 += w;
    acc = acc + (w / 3.0) * (p + q);
  }
  return o + acc / a2;
}

bool contains(const ConvexPolygon& k, Point2 p, double tol) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point2 e = k.edge(i);
    if (cross(e, p - k[i]) < -tol * norm(e)) return false;
  }
  return true;
}

double distance_to(const ConvexPolygon& k, Point2 p) {
  if (contains(k, p)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k.size(); ++i) d = std::min(d, segment_distance(p, k.vertex(i), k.vertex(i + 1)));
  return d;
}

double hausdorff(const ConvexPolygon& k, const ConvexPolygon& l) {
  double d = 0.0;
  for (const Point2& v : k.vertices()) d = std::max(d, distance_to(l, v));
  for (const Point2& v : l.vertices()) d = std::max(d, distance_to(k, v));
  return d;
}

ConvexPolygon polar(const ConvexPolygon& k) {
  const double tol = kGeomEps * k.extent();
  std::vector<Point2> v;
  v.reserve(k.size());
  for (const Halfplane& h : to_halfplanes(k)) {
    if (h.offset <= tol) {
      throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point of the polygon");
    }
    v.push_back(h.normal / h.offset);
  }
  return ConvexPolygon::from_vertices(std::move(v));
}

bool is_origin_symmetric(const ConvexPolygon& k, double tol) {
  const std::size_t n = k.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(k[i] + k.vertex(i + n / 2)) > tol * k.extent()) return false;
  }
  return true;
}

ConvexPolygon regular_polygon(std::size_t n, double radius, double phase) {
  std::vector<Point2> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = phase + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    v.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return ConvexPolygon::from_vertices(std::move(v));
}

}  // namespace chirality
