#pragma once

// Optimal containment: R(K,C) = min { lambda : K in t + lambda C }.

#include <cstddef>
#include <vector>

#include "chirality/geometry.hpp"

namespace chirality {

/// Relative feasibility tolerance for vertices of K in t + lambda C.
inline constexpr double kFeasEps = 1e-9;
/// Relative slack under which a vertex counts as touching an edge.
inline constexpr double kTouchEps = 1e-7;

struct TouchingPair {
  std::size_t vertex;  // index into K
  std::size_t edge;    // index into C (edge i joins vertices i and i+1)
};

struct ContainmentResult {
  double lambda = 0.0;
  Point2 translation;
  /// Outward unit normals of the touched edges of C, in edge order.
  std::vector<Point2> touching_normals;
  std::vector<TouchingPair> touching_pairs;
};

/// Throws Error(SolverFailure) if the LP does not reach an optimum.
ContainmentResult circumradius(const ConvexPolygon& k, const ConvexPolygon& c);

/// lambda only; skips contact extraction.
double circumradius_value(const ConvexPolygon& k, const ConvexPolygon& c);

/// r(K,C) = 1 / R(C,K).
double inradius(const ConvexPolygon& k, const ConvexPolygon& c);

/// Checks feasibility of (lambda, translation) and that the origin lies in
/// the convex hull of the touching normals recomputed from the placement.
bool certify_optimality(const ConvexPolygon& k, const ConvexPolygon& c,
                        const ContainmentResult& result);

/// d_D(K,C) = R(K,C) / r(K,C) = R(K,C) R(C,K).
double distance_dD(const ConvexPolygon& k, const ConvexPolygon& c);

/// Touching normals and pairs of K against t + lambda C at relative slack tol.
void extract_contacts(const ConvexPolygon& k, const ConvexPolygon& c, ContainmentResult& result,
                      double tol = kTouchEps);

/// True iff 0 is in the convex hull of the unit vectors (angular-gap test).
bool origin_in_hull(const std::vector<Point2>& normals, double angle_tol = 1e-9);

}  // namespace chirality
