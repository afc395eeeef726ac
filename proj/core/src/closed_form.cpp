#include "chirality/closed_form.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "chirality/error.hpp"

namespace chirality {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTol = 1e-9;
constexpr double kIdentityTol = 1e-9;
constexpr double kAchiralTol = 1e-12;
// Opposite edges of a parallelogram must agree to this fraction of the extent.
constexpr double kParallelTol = 1e-9;

double angle_of(Point2 d) { return std::atan2(d.y, d.x); }

bool is_parallelogram(const ConvexPolygon& k) {
  if (k.size() != 4) return false;
  const Point2 gap = (k[0] + k[2]) - (k[1] + k[3]);
  return norm(gap) <= kParallelTol * k.extent();
}

struct JohnFrame {
  Point2 major;  // unit eigenvector of the smallest eigenvalue
  double mu_small;
  double mu_large;
};

// John ellipse of conv{±a, ±b} as { x : x^T Q x <= 1 }, Q = M^-T M^-1 with
// M = [a b] [[-1, 1], [1, 1]]^-1 mapping [-1,1]^2 onto the parallelogram.
JohnFrame john_frame(Point2 a, Point2 b) {
  Eigen::Matrix2d ab;
  ab << a.x, b.x, a.y, b.y;
  Eigen::Matrix2d s;
  s << -1, 1, 1, 1;
  const Eigen::Matrix2d m = ab * s.inverse();
  const Eigen::Matrix2d m_inv = m.inverse();
  const Eigen::Matrix2d q = m_inv.transpose() * m_inv;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const Eigen::Vector2d v = eig.eigenvectors().col(0);
  return {{v.x(), v.y()}, eig.eigenvalues()(0), eig.eigenvalues()(1)};
}

void check_canonical(const CanonicalParallelogram& c) {
  if (!(c.z1 > 0.0) || !(c.z2 > 0.0) || !(c.z1 * c.z1 + c.z2 * c.z2 < 1.0)) {
    throw Error(ErrorCode::DegenerateShape, "canonical coordinates need z1, z2 > 0 and z1^2 + z2^2 < 1");
  }
}

// Picks the realization axis for a tag, or the first candidate when absent.
std::optional<Axis> axis_for(const std::vector<TaggedAxis>& axes, AxisTag tag) {
  for (const TaggedAxis& a : axes) {
    if (a.tag == tag) return a.axis;
  }
  return std::nullopt;
}

template <std::size_t N>
ChiralityResult argmin_result(const std::array<double, N>& values, const std::array<AxisTag, N>& tags,
                              const ConvexPolygon& realization) {
  ChiralityResult r;
  r.value = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < N; ++i) {
    if (values[i] <= r.value + kTieTol) r.ties.push_back(tags[i]);
  }
  const std::vector<TaggedAxis> axes = candidate_axes(realization);
  r.axis = axis_for(axes, r.ties.front());
  r.classification = r.value <= 1.0 + kIdentityTol ? AxisTag::Identity : r.ties.front();
  return r;
}

}  // namespace

TriangleShape TriangleShape::from_sides(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  if (!std::isfinite(s[2]) || !(s[0] > 0.0) || !(s[2] < s[0] + s[1])) {
    throw Error(ErrorCode::DegenerateShape, "side lengths violate the triangle inequality");
  }
  return {s[0], s[1], s[2]};
}

ParallelogramShape ParallelogramShape::make(double r, double theta) {
  if (!std::isfinite(r) || !(r >= 1.0) || !(theta >= kPi / 2) || !(theta < kPi)) {
    throw Error(ErrorCode::DegenerateShape, "parallelogram needs r >= 1 and pi/2 <= theta < pi");
  }
  return {r, theta};
}

bool ParallelogramShape::is_achiral() const {
  return r - 1.0 <= kAchiralTol || theta - kPi / 2 <= kAchiralTol;
}

TriangleAxisValues triangle_axis_values(const TriangleShape& t) {
  const double x = t.x, y = t.y, z = t.z;
  return {y / x,
          z / y,
          z / x,
          1 + (y * y - x * x) / (z * z),
          1 + (z * z - x * x) / (y * y),
          1 + (z * z - y * y) / (x * x)};
}

ChiralityResult triangle_alpha1(const TriangleShape& t) {
  const TriangleAxisValues v = triangle_axis_values(t);
  return argmin_result<3>({v.bisector_largest, v.bisector_smallest, v.perp_longest},
                          {AxisTag::BisectorLargestAngle, AxisTag::BisectorSmallestAngle,
                           AxisTag::PerpLongestEdge},
                          triangle_realization(t));
}

ParallelogramAxisValues parallelogram_axis_values(const ParallelogramShape& p) {
  const double r = p.r;
  const double c = std::cos(p.theta);
  ParallelogramAxisValues v;
  v.edge_bisector = r;
  v.diagonal_bisector = (r * r - 2 * r * c + 1) / std::sqrt((r * r + 1) * (r * r + 1) - 4 * r * r * c * c);
  v.john_axis = (r * r - 2 * r * c - 1) / std::sqrt((r * r - 1) * (r * r - 1) + 4 * r * r * c * c);
  v.degenerate = p.is_achiral();
  return v;
}

ChiralityResult parallelogram_alpha1(const ParallelogramShape& p) {
  const ParallelogramAxisValues v = parallelogram_axis_values(p);
  const std::array<AxisTag, 3> tags{AxisTag::EdgeBisector, AxisTag::DiagonalBisector, AxisTag::JohnAxis};
  const std::array<double, 3> values{v.edge_bisector, v.diagonal_bisector, v.john_axis};
  if (!v.degenerate) return argmin_result<3>(values, tags, parallelogram_realization(p));

  ChiralityResult r;
  r.value = 1.0;
  r.classification = AxisTag::Identity;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::isfinite(values[i]) && values[i] <= 1.0 + kTieTol) r.ties.push_back(tags[i]);
  }
  const std::vector<TaggedAxis> axes = candidate_axes(parallelogram_realization(p));
  for (AxisTag tag : r.ties) {
    if (auto ax = axis_for(axes, tag)) {
      r.axis = ax;
      break;
    }
  }
  return r;
}

Shape shape_from_vertices(const ConvexPolygon& k) {
  if (k.size() == 3) {
    return TriangleShape::from_sides(norm(k.edge(0)), norm(k.edge(1)), norm(k.edge(2)));
  }
  if (is_parallelogram(k)) {
    const Point2 e0 = k.edge(0);
    const Point2 e1 = k.edge(1);
    const double l0 = norm(e0);
    const double l1 = norm(e1);
    const double cos_a = std::clamp(dot(e0, e1) / (l0 * l1), -1.0, 1.0);
    const double r = std::max(l0, l1) / std::min(l0, l1);
    const double theta = std::acos(-std::abs(cos_a));
    return ParallelogramShape{r, std::min(theta, std::nextafter(kPi, 0.0))};
  }
  throw Error(ErrorCode::NotATriangleOrParallelogram, "polygon is neither a triangle nor a parallelogram");
}

CanonicalParallelogram canonical_coords(const ParallelogramShape& p) {
  if (!(p.r > 1.0) || !(p.theta > kPi / 2) || !(p.theta < kPi)) {
    throw Error(ErrorCode::DegenerateShape, "canonical coordinates need r > 1 and theta > pi/2");
  }
  const double r = p.r;
  const double den = 1 + r * r - 2 * r * std::cos(p.theta);
  return {(r * r - 1) / den, 2 * r * std::sin(p.theta) / den};
}

Axis john_axis(const CanonicalParallelogram& c) {
  check_canonical(c);
  return Axis(0.5 * std::atan2(2 * c.z1 * c.z2, 1 + c.z1 * c.z1 - c.z2 * c.z2));
}

Axis john_axis_eigen(const CanonicalParallelogram& c) {
  check_canonical(c);
  return Axis(angle_of(john_frame({1.0, 0.0}, {c.z1, c.z2}).major));
}

double john_lambda(const CanonicalParallelogram& c) {
  const double z1 = c.z1, z2 = c.z2;
  const double u = 1 + z1 * z1 - z2 * z2;
  const double w = 2 * z1 * z2;
  return (1 - z1 * z1 - z2 * z2 + 2 * z1) / std::sqrt(u * u + w * w);
}

EllipseSpec john_ellipse(const ConvexPolygon& k) {
  if (!is_parallelogram(k)) throw Error(ErrorCode::NotAParallelogram, "John ellipse needs a parallelogram");
  const Point2 center = 0.25 * (k[0] + k[1] + k[2] + k[3]);
  const JohnFrame f = john_frame(k[0] - center, k[1] - center);
  EllipseSpec e;
  e.center = center;
  e.major_angle = Axis(angle_of(f.major)).theta();
  e.semi_major = 1.0 / std::sqrt(f.mu_small);
  e.semi_minor = 1.0 / std::sqrt(f.mu_large);
  return e;
}

ConvexPolygon triangle_realization(const TriangleShape& t) {
  const double cx = (t.z * t.z + t.y * t.y - t.x * t.x) / (2 * t.z);
  const double cy = std::sqrt(std::max(t.y * t.y - cx * cx, 0.0));
  return ConvexPolygon::from_vertices({{0.0, 0.0}, {t.z, 0.0}, {cx, cy}});
}

ConvexPolygon parallelogram_realization(const ParallelogramShape& p) {
  const Point2 u{p.r, 0.0};
  const Point2 v{std::cos(p.theta), std::sin(p.theta)};
  return ConvexPolygon::from_vertices({{0.0, 0.0}, u, u + v, v});
}

ConvexPolygon canonical_realization(const CanonicalParallelogram& c) {
  return ConvexPolygon::from_vertices({{1.0, 0.0}, {c.z1, c.z2}, {-1.0, 0.0}, {-c.z1, -c.z2}});
}

std::vector<TaggedAxis> candidate_axes(const ConvexPolygon& k) {
  std::vector<TaggedAxis> out;
  const auto bisector = [&](std::size_t i) {
    const std::size_t n = k.size();
    const Point2 d = normalized(k.vertex(i + 1) - k[i]) + normalized(k.vertex(i + n - 1) - k[i]);
    return Axis(angle_of(d));
  };

  if (k.size() == 3) {
    std::array<double, 3> len{};
    for (std::size_t i = 0; i < 3; ++i) len[i] = norm(k.edge(i));
    const double lmax = *std::max_element(len.begin(), len.end());
    const double lmin = *std::min_element(len.begin(), len.end());
    const double tol = 1e-12 * lmax;
    // Edge i joins vertices i and i+1; the opposite vertex is i+2.
    for (std::size_t i = 0; i < 3; ++i) {
      if (len[i] >= lmax - tol) out.push_back({AxisTag::BisectorLargestAngle, bisector((i + 2) % 3)});
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (len[i] <= lmin + tol) out.push_back({AxisTag::BisectorSmallestAngle, bisector((i + 2) % 3)});
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (len[i] >= lmax - tol) out.push_back({AxisTag::PerpLongestEdge, Axis(angle_of(perp(k.edge(i))))});
    }
    return out;
  }

  if (!is_parallelogram(k)) return out;
  const Point2 u = normalized(k[1] - k[0]);
  const Point2 w = normalized(k[3] - k[0]);
  out.push_back({AxisTag::EdgeBisector, Axis(angle_of(u + w))});
  out.push_back({AxisTag::EdgeBisector, Axis(angle_of(u - w))});
  const Point2 d1 = normalized(k[2] - k[0]);
  const Point2 d2 = normalized(k[3] - k[1]);
  out.push_back({AxisTag::DiagonalBisector, Axis(angle_of(d1 + d2))});
  out.push_back({AxisTag::DiagonalBisector, Axis(angle_of(d1 - d2))});
  const Point2 center = 0.25 * (k[0] + k[1] + k[2] + k[3]);
  const JohnFrame f = john_frame(k[0] - center, k[1] - center);
  if (f.mu_large - f.mu_small > 1e-12 * f.mu_large) {
    out.push_back({AxisTag::JohnAxis, Axis(angle_of(f.major))});
    out.push_back({AxisTag::JohnAxis, Axis(angle_of(perp(f.major)))});
  }
  return out;
}

}  // namespace chirality
