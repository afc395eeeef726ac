#pragma once

// Two-phase revised simplex for small dense standard-form programs
//
//     maximize c^T x   subject to   A x = b,  x >= 0,   with b >= 0.
//
// Pivoting follows Bland's rule (smallest eligible index for both the entering
// and the leaving variable), so the iteration sequence is fully determined by
// the input and degenerate problems cannot cycle.

#include <cstddef>
#include <span>
#include <vector>

namespace chirality::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::Infeasible;
  double objective = 0.0;
  /// Primal values, one per column of A.
  std::vector<double> x;
  /// Basic column per row; artificial columns are reported as npos.
  std::vector<std::size_t> basis;
  /// Simplex multipliers w with B^T w = c_B (optimal solution of the dual
  /// program  min b^T w  s.t.  A^T w >= c).
  std::vector<double> duals;
  std::size_t iterations = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct Options {
  /// Reduced-cost tolerance, relative to max |c|.
  double optimality_tol = 1e-11;
  /// Smallest admissible pivot magnitude, relative to the column scale.
  double pivot_tol = 1e-11;
  std::size_t max_iterations = 0;  // 0: 50 * (rows + cols)
};

/// `a` is row-major with `rows` rows; its length must be rows * c.size().
Solution maximize(std::size_t rows, std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, const Options& opts = {});

}  // namespace chirality::lp
