#pragma once

// Randomized checks of the general inequalities between alpha_0, alpha_1,
// alpha_2 and the containment distance, plus the explicit constants.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chirality/chirality.hpp"
#include "chirality/geometry.hpp"

namespace chirality {

inline constexpr double kBoundEps = 1e-6;

/// lhs <= rhs check; margin = rhs - lhs, pass iff margin >= -kBoundEps.
struct BoundCheck {
  std::string name;
  double lhs;
  double rhs;
  double margin;
  bool pass;
};

struct BoundReport {
  std::string body_id;
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 1.0;
  std::vector<BoundCheck> checks;

  void add(std::string name, double lhs, double rhs);
  bool all_pass() const;
};

/// 1 <= alpha1 <= min{2, (alpha0+1)/2 sqrt2}, alpha1 <= sqrt(2 alpha0), alpha0 <= 2.
BoundReport check_main_bounds(const ConvexPolygon& k, const Alpha1Options& opts = {});

/// Both alpha ratios of K and L are at most d_D(K, L).
BoundReport check_ratio_bound(const ConvexPolygon& k, const ConvexPolygon& l, const Alpha1Options& opts = {});

/// alpha_1/alpha_1, alpha_0/alpha_2 and alpha_2/alpha_0 are at most alpha_0.
/// For origin-symmetric K also alpha1(K) = alpha1(polar K) within 1e-6 and
/// alpha1 <= sqrt2.
BoundReport check_symmetry_relations(const ConvexPolygon& k, const Alpha1Options& opts = {});

struct BoundConstants {
  double c21_radical;     // closed radical expression
  double c21_bisection;   // sqrt(2 (2 - eps)) with eps from bisection
  double eps21;           // eps(2,1)
  double s21;             // sup of alpha_1 over triangles
};

/// s(2,1) (1 + 3 eps / (1 - 2 eps)) at eps.
double stability_factor(double eps);
BoundConstants eval_constants();

/// conv(unit disk_sides-gon, beta T) with T the regular triangle inscribed in
/// the unit circle. Throws Error(OutOfRange) unless 1 <= beta <= 2.
ConvexPolygon make_asymmetry_witness(double beta, std::size_t disk_sides = 720);

struct CampaignOptions {
  std::size_t bodies = 500;
  std::size_t pairs = 200;
  std::size_t symmetric = 300;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  Alpha1Options alpha1{};
};

/// Main bounds on random polygons, ratio bounds on random pairs and symmetry
/// relations on random origin-symmetric polygons. Bodies are drawn
/// sequentially from one generator, so the result depends only on the seed.
std::vector<BoundReport> run_campaign(const CampaignOptions& opts);

/// "body_id,check,lhs,rhs,margin,pass", one row per check.
void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace chirality
