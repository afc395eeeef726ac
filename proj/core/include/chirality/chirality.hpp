#pragma once

// Minkowski asymmetry alpha_0 and chirality alpha_1, alpha_2 of polygons.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "chirality/geometry.hpp"

namespace chirality {

enum class AxisTag {
  Numeric,
  BisectorLargestAngle,
  BisectorSmallestAngle,
  PerpLongestEdge,
  EdgeBisector,
  DiagonalBisector,
  JohnAxis,
  Identity,
};

/// "numeric", "bisector-largest-angle", ...
std::string_view to_string(AxisTag tag) noexcept;

struct ProfileSample {
  double theta;
  double value;
};

struct ChiralityResult {
  double value = 1.0;
  /// Absent for alpha_0 and alpha_2.
  std::optional<Axis> axis;
  AxisTag classification = AxisTag::Numeric;
  /// Every tag attaining the value (closed forms) or matching the axis
  /// (numeric); contains classification unless it is Numeric.
  std::vector<AxisTag> ties;
  std::vector<ProfileSample> profile;
};

struct Alpha1Options {
  std::size_t grid = 2048;
  double refine_tol = 1e-10;
  /// Local grid minima within this distance of the grid minimum are refined.
  double refine_window = 1e-3;
  /// Axis matching tolerance against the closed-form candidates, radians.
  double match_tol = 1e-6;
  /// 0: CHIRALITY_THREADS or hardware concurrency.
  std::size_t threads = 0;
  bool keep_profile = false;
  /// Also sample every axis that maps an edge normal of K onto an edge normal
  /// of K, where the profile has its kinks. Skipped above this vertex count.
  std::size_t kink_vertex_limit = 64;
};

/// R(K, -K).
ChiralityResult asymmetry_alpha0(const ConvexPolygon& k);

/// R(K, Phi_theta(K)).
double chirality_profile(const ConvexPolygon& k, double theta);

/// Samples at theta_i = i pi / grid.
std::vector<ProfileSample> sample_profile(const ConvexPolygon& k, std::size_t grid,
                                          std::size_t threads = 0);

/// Grid sweep over [0, pi) followed by golden-section refinement of every
/// local minimum near the grid minimum.
ChiralityResult alpha1_numeric(const ConvexPolygon& k, const Alpha1Options& opts = {});

/// Always 1: reflection in the whole plane is the identity.
ChiralityResult alpha2(const ConvexPolygon& k);

/// Classification of a numeric optimum: identity when value <= 1 + 1e-9,
/// otherwise the nearest closed-form candidate axis within match_tol.
void classify(const ConvexPolygon& k, ChiralityResult& result, double match_tol = 1e-6);

/// "theta,R" CSV with 12 significant digits.
void write_profile_csv(std::ostream& out, const std::vector<ProfileSample>& profile);

}  // namespace chirality
