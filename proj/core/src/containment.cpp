#include "chirality/containment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chirality/error.hpp"
#include "chirality/lp.hpp"

namespace chirality {

namespace {

struct Solved {
  double lambda;
  Point2 translation;
};

// Dual of  min lambda  s.t.  a_i.t + b_i lambda >= h_K(a_i),  with C recentred
// at its centroid so that every b_i > 0:
//   max sum h_i y_i  s.t.  sum y_i a_i = 0,  sum y_i b_i = 1,  y >= 0.
Solved solve(const ConvexPolygon& k, const ConvexPolygon& c) {
  const Point2 c0 = centroid(c);
  const std::vector<Halfplane> hp = to_halfplanes(c);
  const std::size_t m = hp.size();

  std::vector<Point2> normals(m);
  for (std::size_t i = 0; i < m; ++i) normals[i] = hp[i].normal;
  const std::vector<double> h = support_sweep(k, normals);

  std::vector<double> a(3 * m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = hp[i].normal.x;
    a[m + i] = hp[i].normal.y;
    a[2 * m + i] = hp[i].offset - dot(hp[i].normal, c0);
  }
  const double b[3] = {0.0, 0.0, 1.0};

  const lp::Solution sol = lp::maximize(3, a, b, h);
  if (sol.status != lp::Status::Optimal || !(sol.duals[2] > 0.0) || !std::isfinite(sol.duals[2])) {
    throw Error(ErrorCode::SolverFailure, "containment LP did not reach an optimum");
  }
  const double lambda = sol.duals[2];
  const Point2 t{sol.duals[0], sol.duals[1]};
  return {lambda, t - lambda * c0};
}

double diameter_scale(const ConvexPolygon& c, double lambda) { return lambda * c.diameter(); }

}  // namespace

void extract_contacts(const ConvexPolygon& k, const ConvexPolygon& c, ContainmentResult& result,
                      double tol) {
  result.touching_normals.clear();
  result.touching_pairs.clear();
  const double eps = tol * diameter_scale(c, result.lambda);
  const std::vector<Halfplane> hp = to_halfplanes(c);
  for (std::size_t i = 0; i < hp.size(); ++i) {
    const double bound = dot(hp[i].normal, result.translation) + result.lambda * hp[i].offset;
    bool touched = false;
    for (std::size_t v = 0; v < k.size(); ++v) {
      if (bound - dot(hp[i].normal, k[v]) <= eps) {
        result.touching_pairs.push_back({v, i});
        touched = true;
      }
    }
    if (touched) result.touching_normals.push_back(hp[i].normal);
  }
}

bool origin_in_hull(const std::vector<Point2>& normals, double angle_tol) {
  if (normals.size() < 2) return false;
  std::vector<double> angles;
  angles.reserve(normals.size());
  for (const Point2& n : normals) angles.push_back(std::atan2(n.y, n.x));
  std::sort(angles.begin(), angles.end());
  double max_gap = angles.front() + 2 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  return max_gap <= std::numbers::pi + angle_tol;
}

ContainmentResult circumradius(const ConvexPolygon& k, const ConvexPolygon& c) {
  const Solved s = solve(k, c);
  ContainmentResult result;
  result.lambda = s.lambda;
  result.translation = s.translation;
  extract_contacts(k, c, result);
  return result;
}

double circumradius_value(const ConvexPolygon& k, const ConvexPolygon& c) { return solve(k, c).lambda; }

double inradius(const ConvexPolygon& k, const ConvexPolygon& c) { return 1.0 / circumradius_value(c, k); }

bool certify_optimality(const ConvexPolygon& k, const ConvexPolygon& c,
                        const ContainmentResult& result) {
  if (!(result.lambda > 0.0)) return false;
  const double feas = kFeasEps * diameter_scale(c, result.lambda);
  for (const Halfplane& h : to_halfplanes(c)) {
    const double bound = dot(h.normal, result.translation) + result.lambda * h.offset;
    for (const Point2& v : k.vertices()) {
      if (dot(h.normal, v) > bound + feas) return false;
    }
  }
  ContainmentResult recomputed = result;
  extract_contacts(k, c, recomputed);
  return origin_in_hull(recomputed.touching_normals);
}

double distance_dD(const ConvexPolygon& k, const ConvexPolygon& c) {
  return circumradius_value(k, c) * circumradius_value(c, k);
}

}  // namespace chirality
