#pragma once

// Which candidate axis attains alpha_1, as a function of the shape
// parameters of triangles and parallelograms.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "chirality/chirality.hpp"

namespace chirality {

/// Boundary flagging distance in parameter space.
inline constexpr double kPhaseEps = 1e-6;

struct PhaseConstants {
  double y0;  // positive root of y^4 + y^3 = 1
  double x0;  // root of 16x^4 - 2x - 1 = 0 in (1/2, 1)
};

/// Bisection to a residual below 1e-12.
PhaseConstants solve_constants();

enum class Region { B, D, J, L, S, P };

std::string_view to_string(Region r) noexcept;
/// Axis tag that a region stands for (B: edge-bisector, L: largest angle, ...).
AxisTag region_axis(Region r) noexcept;

struct PhaseRegion {
  Region tag;
  bool on_boundary = false;
};

// Boundary curves. Triangle with sides x < y < 1:
double sides_psi1(double y);
double sides_psi2(double y);
// Triangle conv{(0,0), (1,0), (x,y)}:
double xy_psi1(double x);
double xy_psi2(double x);
// Parallelogram (r, theta), as angles in (pi/2, pi):
double parallelogram_psi1(double r);
double parallelogram_psi2(double r);

/// Domain 0 < x < y < 1 < x + y. Throws Error(OutOfDomain).
PhaseRegion triangle_phase(double x, double y);
/// Domain x > 1/2, y > 0, x^2 + y^2 < 1. Throws Error(OutOfDomain).
PhaseRegion triangle_phase_xy(double x, double y);
/// Domain r > 1, pi/2 < theta < pi. Throws Error(OutOfDomain).
PhaseRegion parallelogram_phase(double r, double theta);

enum class Family { TriangleXY, TriangleSides, Parallelogram };

std::string_view to_string(Family f) noexcept;
/// Throws Error(ParseError) for unknown names.
Family parse_family(std::string_view name);

struct GridCell {
  double p1;
  double p2;
  PhaseRegion region;
  double alpha1;
  double axis_theta;
};

/// Cell-centred resolution x resolution grid in row-major order (p2 outer).
/// Parallelogram: r in (1,3), theta in (pi/2, pi). Triangle sides: y in
/// (1/2,1), x = 1 - y + u (2y - 1). Triangle xy: x in (1/2,1),
/// y = u sqrt(1 - x^2). Throws Error(OutOfRange) if resolution < 16.
std::vector<GridCell> phase_grid(Family family, std::size_t resolution, std::size_t threads = 0);

/// Closed-form alpha_1 and its realization axis at a parameter point.
ChiralityResult family_alpha1(Family family, double p1, double p2);
/// The polygon whose axes family_alpha1 refers to.
ConvexPolygon family_realization(Family family, double p1, double p2);

/// "p1,p2,region,alpha1,axis_theta", 12 significant digits.
void write_grid_csv(std::ostream& out, const std::vector<GridCell>& cells);
/// Region-coloured points with the boundary curves overlaid.
void write_grid_svg(std::ostream& out, Family family, const std::vector<GridCell>& cells);

enum class GridFormat { Csv, Svg };
/// Throws Error(IOError).
void emit_grid(Family family, std::size_t resolution, const std::filesystem::path& path,
               GridFormat format = GridFormat::Csv, std::size_t threads = 0);

struct AnglePair {
  double delta;
  double theta;
};
/// J/B equality curve in the (diagonal angle, interior angle) parametrization,
/// sampled over r in (1, sqrt 2).
std::vector<AnglePair> jb_curve_delta_theta(std::size_t samples);

}  // namespace chirality
