#pragma once

// Closed-form chirality of triangles and parallelograms, shape parameters,
// candidate axes and the John ellipse of a parallelogram.

#include <variant>
#include <vector>

#include "chirality/chirality.hpp"
#include "chirality/geometry.hpp"

namespace chirality {

/// Side lengths sorted as 0 < x <= y <= z < x + y.
struct TriangleShape {
  double x;
  double y;
  double z;

  /// Sorts and validates. Throws Error(DegenerateShape).
  static TriangleShape from_sides(double a, double b, double c);
};

/// Long/short side ratio r >= 1 and the larger interior angle theta in
/// [pi/2, pi).
struct ParallelogramShape {
  double r;
  double theta;

  /// Throws Error(DegenerateShape) outside the invariants.
  static ParallelogramShape make(double r, double theta);
  /// Rectangle or rhombus, up to 1e-12.
  bool is_achiral() const;
};

/// K = conv{±(1,0), ±(z1,z2)} with z1, z2 > 0 and z1^2 + z2^2 < 1.
struct CanonicalParallelogram {
  double z1;
  double z2;
};

struct TriangleAxisValues {
  double bisector_largest;   // y/x
  double bisector_smallest;  // z/y
  double bisector_middle;    // z/x
  double perp_longest;       // 1 + (y^2 - x^2)/z^2
  double perp_middle;        // 1 + (z^2 - x^2)/y^2
  double perp_shortest;      // 1 + (z^2 - y^2)/x^2
};

struct ParallelogramAxisValues {
  double edge_bisector;
  double diagonal_bisector;
  double john_axis;
  /// Set for rectangles and rhombuses, where every value collapses to an
  /// identity case.
  bool degenerate = false;
};

TriangleAxisValues triangle_axis_values(const TriangleShape& t);

/// min{z/y, y/x, 1 + (y^2-x^2)/z^2}. The axis refers to triangle_realization(t).
ChiralityResult triangle_alpha1(const TriangleShape& t);

ParallelogramAxisValues parallelogram_axis_values(const ParallelogramShape& p);

/// min over the three axis values; 1 for rectangles and rhombuses. The axis
/// refers to parallelogram_realization(p).
ChiralityResult parallelogram_alpha1(const ParallelogramShape& p);

using Shape = std::variant<TriangleShape, ParallelogramShape>;

/// Throws Error(NotATriangleOrParallelogram).
Shape shape_from_vertices(const ConvexPolygon& k);

/// Throws Error(DegenerateShape) unless r > 1 and theta > pi/2.
CanonicalParallelogram canonical_coords(const ParallelogramShape& p);

/// Major axis of the John ellipse from cot(2 phi) = (1+z1^2-z2^2)/(2 z1 z2).
/// Throws Error(DegenerateShape) on invalid coordinates.
Axis john_axis(const CanonicalParallelogram& c);

/// Major axis of the John ellipse from the eigenvectors of M^-T M^-1.
Axis john_axis_eigen(const CanonicalParallelogram& c);

double john_lambda(const CanonicalParallelogram& c);

/// John ellipse of a parallelogram. Throws Error(NotAParallelogram).
EllipseSpec john_ellipse(const ConvexPolygon& k);

/// Vertices (0,0), (z,0) and the apex at distances y and x from them.
ConvexPolygon triangle_realization(const TriangleShape& t);

/// Vertices (0,0), (r,0), (r + cos theta, sin theta), (cos theta, sin theta).
ConvexPolygon parallelogram_realization(const ParallelogramShape& p);

/// conv{±(1,0), ±(z1,z2)}.
ConvexPolygon canonical_realization(const CanonicalParallelogram& c);

struct TaggedAxis {
  AxisTag tag;
  Axis axis;
};

/// Candidate optimal axes of a triangle (largest/smallest angle bisectors,
/// perpendicular to the longest edge, every tied choice included) or a
/// parallelogram (edge and diagonal bisectors, John axes). Empty otherwise.
std::vector<TaggedAxis> candidate_axes(const ConvexPolygon& k);

}  // namespace chirality
