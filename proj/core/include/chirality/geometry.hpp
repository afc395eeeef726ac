#pragma once

// Planar primitives: points, convex polygons, reflection axes and the exact
// operations on them (hull, support, reflection, polarity, Hausdorff distance).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace chirality {

/// Tolerance for collinearity and degeneracy tests, relative to the extent
/// of the point set under test.
inline constexpr double kGeomEps = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline Point2 normalized(Point2 a) { return a / norm(a); }
/// Counter-clockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }

/// A line through the origin, stored by its direction angle modulo pi.
class Axis {
 public:
  Axis() = default;
  explicit Axis(double theta);

  double theta() const noexcept { return theta_; }
  Point2 direction() const noexcept { return {std::cos(theta_), std::sin(theta_)}; }
  Axis perpendicular() const { return Axis(theta_ + std::numbers::pi / 2); }

  /// Reflection across the line: 2 P_U(x) - x.
  Point2 reflect(Point2 p) const noexcept;

 private:
  double theta_ = 0.0;
};

/// Angular distance between two axes, in [0, pi/2].
double axis_distance(Axis a, Axis b);

/// The set { x : normal . x <= offset }.
struct Halfplane {
  Point2 normal;
  double offset = 0.0;
};

struct EllipseSpec {
  Point2 center;
  double major_angle = 0.0;
  double semi_major = 1.0;
  double semi_minor = 1.0;

  bool is_circle(double tol = 1e-12) const {
    return semi_major - semi_minor <= tol * semi_major;
  }
  /// Support function h_E(dir).
  double support(Point2 dir) const;
  /// Quadratic form value (x-c)^T Q (x-c); 1 on the boundary.
  double gauge_squared(Point2 p) const;
};

/// Strictly convex polygon, counter-clockwise, starting at its
/// lexicographically smallest vertex. Immutable after construction.
class ConvexPolygon {
 public:
  /// Validates and canonicalizes an ordered vertex list (either orientation).
  /// Throws Error(DegenerateInput) when the list is not a strictly convex
  /// polygon with positive area.
  static ConvexPolygon from_vertices(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge vector from vertex i to vertex i+1.
  Point2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  /// Largest absolute coordinate extent; scale for relative tolerances.
  double extent() const noexcept { return extent_; }
  double diameter() const;

  ConvexPolygon translated(Point2 t) const;
  ConvexPolygon scaled(double s) const;
  /// Rotation about the origin.
  ConvexPolygon rotated(double angle) const;
  /// Point reflection -K.
  ConvexPolygon negated() const;

  /// Vertexwise comparison of canonical forms.
  bool approx_equal(const ConvexPolygon& other, double tol) const;

 private:
  struct Trusted {};
  ConvexPolygon(Trusted, std::vector<Point2> ccw_vertices);

  std::vector<Point2> vertices_;
  double extent_ = 0.0;
};

/// Canonical convex hull. Collinear and duplicate points are dropped.
/// Throws Error(DegenerateInput) if the points span no area.
ConvexPolygon convex_hull(std::span<const Point2> points);

/// Image of K under reflection across the axis, re-canonicalized.
ConvexPolygon reflect(const ConvexPolygon& k, Axis axis);

/// h_K(dir) = max over vertices of dir . v. Throws Error(ZeroDirection).
double support(const ConvexPolygon& k, Point2 dir);

/// Support values for a sequence of directions sorted counter-clockwise by
/// angle (such as the edge normals of another polygon). Linear time.
std::vector<double> support_sweep(const ConvexPolygon& k, std::span<const Point2> ccw_dirs);

/// One outward halfplane per edge; halfplane i belongs to edge (i, i+1).
std::vector<Halfplane> to_halfplanes(const ConvexPolygon& k);

double area(const ConvexPolygon& k);
Point2 centroid(const ConvexPolygon& k);

bool contains(const ConvexPolygon& k, Point2 p, double tol = 0.0);
double distance_to(const ConvexPolygon& k, Point2 p);

/// Exact Hausdorff distance; the supremum is attained at vertices.
double hausdorff(const ConvexPolygon& k, const ConvexPolygon& l);

/// Polar body w.r.t. the origin. Throws Error(OriginNotInterior).
ConvexPolygon polar(const ConvexPolygon& k);

/// True if K = -K up to tol (relative to extent).
bool is_origin_symmetric(const ConvexPolygon& k, double tol = 1e-9);

ConvexPolygon regular_polygon(std::size_t n, double radius = 1.0, double phase = 0.0);

}  // namespace chirality
