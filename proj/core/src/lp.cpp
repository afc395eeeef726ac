#include "chirality/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <optional>

namespace chirality::lp {

namespace {

// Revised simplex on a small row count: the basis matrix is refactored from
// the original columns at every iteration, so round-off from an
// ill-conditioned intermediate basis does not carry over to later ones.
class Problem {
 public:
  Problem(std::size_t rows, std::span<const double> a, std::span<const double> b,
          std::span<const double> c)
      : rows_(rows), cols_(c.size()), a_(a), b_(b), c_(c), basis_(rows), lu_(rows * rows), perm_(rows) {
    for (std::size_t r = 0; r < rows; ++r) basis_[r] = cols_ + r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t total() const { return cols_ + rows_; }
  bool artificial(std::size_t j) const { return j >= cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  double entry(std::size_t r, std::size_t j) const {
    return j < cols_ ? a_[r * cols_ + j] : (j - cols_ == r ? 1.0 : 0.0);
  }

  // LU factorization of B with partial pivoting. False if singular.
  bool factor() {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < rows_; ++k) lu(r, k) = entry(r, basis_[k]);
      perm_[r] = r;
    }
    for (std::size_t k = 0; k < rows_; ++k) {
      std::size_t p = k;
      for (std::size_t r = k + 1; r < rows_; ++r) {
        if (std::abs(lu(r, k)) > std::abs(lu(p, k))) p = r;
      }
      if (lu(p, k) == 0.0) return false;
      if (p != k) {
        for (std::size_t q = 0; q < rows_; ++q) std::swap(lu(p, q), lu(k, q));
        std::swap(perm_[p], perm_[k]);
      }
      for (std::size_t r = k + 1; r < rows_; ++r) {
        lu(r, k) /= lu(k, k);
        const double f = lu(r, k);
        if (f == 0.0) continue;
        for (std::size_t q = k + 1; q < rows_; ++q) lu(r, q) -= f * lu(k, q);
      }
    }
    return true;
  }

  // B x = v.
  std::vector<double> solve(const std::vector<double>& v) const {
    std::vector<double> x(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      double s = v[perm_[r]];
      for (std::size_t k = 0; k < r; ++k) s -= lu(r, k) * x[k];
      x[r] = s;
    }
    for (std::size_t r = rows_; r-- > 0;) {
      double s = x[r];
      for (std::size_t k = r + 1; k < rows_; ++k) s -= lu(r, k) * x[k];
      x[r] = s / lu(r, r);
    }
    return x;
  }

  // B^T w = v.
  std::vector<double> solve_transposed(const std::vector<double>& v) const {
    std::vector<double> z(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      double s = v[r];
      for (std::size_t k = 0; k < r; ++k) s -= lu(k, r) * z[k];
      z[r] = s / lu(r, r);
    }
    for (std::size_t r = rows_; r-- > 0;) {
      double s = z[r];
      for (std::size_t k = r + 1; k < rows_; ++k) s -= lu(k, r) * z[k];
      z[r] = s;
    }
    std::vector<double> w(rows_);
    for (std::size_t r = 0; r < rows_; ++r) w[perm_[r]] = z[r];
    return w;
  }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = entry(r, j);
    return v;
  }

  std::vector<double> rhs() const { return {b_.begin(), b_.end()}; }
  double cost(std::size_t j) const { return j < cols_ ? c_[j] : 0.0; }

 private:
  double& lu(std::size_t r, std::size_t k) { return lu_[r * rows_ + k]; }
  double lu(std::size_t r, std::size_t k) const { return lu_[r * rows_ + k]; }

  std::size_t rows_;
  std::size_t cols_;
  std::span<const double> a_;
  std::span<const double> b_;
  std::span<const double> c_;
  std::vector<std::size_t> basis_;
  std::vector<double> lu_;
  std::vector<std::size_t> perm_;
};

enum class PhaseResult { Optimal, Unbounded, IterationLimit, Singular };

template <class Cost>
PhaseResult run_phase(Problem& p, Cost cost, double opt_tol, double piv_tol, std::size_t max_iter,
                      std::size_t& iterations) {
  std::vector<char> in_basis(p.total(), 0);
  for (;;) {
    if (iterations >= max_iter) return PhaseResult::IterationLimit;
    if (!p.factor()) return PhaseResult::Singular;
    std::fill(in_basis.begin(), in_basis.end(), 0);
    for (std::size_t j : p.basis()) in_basis[j] = 1;

    std::vector<double> cb(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) cb[r] = cost(p.basis()[r]);
    const std::vector<double> w = p.solve_transposed(cb);

    // Bland: smallest index with positive reduced cost; artificials never re-enter.
    std::size_t enter = p.total();
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (in_basis[j]) continue;
      double d = cost(j);
      for (std::size_t r = 0; r < p.rows(); ++r) d -= w[r] * p.entry(r, j);
      if (d > opt_tol) {
        enter = j;
        break;
      }
    }
    if (enter == p.total()) return PhaseResult::Optimal;

    const std::vector<double> x = p.solve(p.rhs());
    const std::vector<double> u = p.solve(p.column(enter));
    std::size_t leave = p.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < p.rows(); ++r) {
      if (u[r] <= piv_tol) continue;
      const double ratio = std::max(x[r], 0.0) / u[r];
      const double slack = 1e-12 * (1.0 + (std::isfinite(best) ? best : ratio));
      if (ratio < best - slack) {
        best = ratio;
        leave = r;
      } else if (ratio <= best + slack && p.basis()[r] < p.basis()[leave]) {
        best = std::min(best, ratio);
        leave = r;
      }
    }
    if (leave == p.rows()) return PhaseResult::Unbounded;
    p.basis()[leave] = enter;
    ++iterations;
  }
}

}  // namespace

Solution maximize(std::size_t rows, std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, const Options& opts) {
  const std::size_t cols = c.size();
  assert(a.size() == rows * cols);
  assert(b.size() == rows);

  Solution sol;
  const std::size_t max_iter = opts.max_iterations ? opts.max_iterations : 50 * (rows + cols) + 100;

  double c_scale = 1.0;
  for (double v : c) c_scale = std::max(c_scale, std::abs(v));
  double a_scale = 1.0;
  for (double v : a) a_scale = std::max(a_scale, std::abs(v));
  double b_scale = 1.0;
  for (double v : b) b_scale = std::max(b_scale, std::abs(v));
  const double piv_tol = opts.pivot_tol * a_scale;

  Problem p(rows, a, b, c);

  // Phase 1: maximize -sum(artificials).
  const auto phase1_cost = [&](std::size_t j) { return p.artificial(j) ? -1.0 : 0.0; };
  PhaseResult res = run_phase(p, phase1_cost, opts.optimality_tol * a_scale, piv_tol, max_iter, sol.iterations);
  if (res == PhaseResult::IterationLimit || res == PhaseResult::Singular) {
    sol.status = Status::IterationLimit;
    return sol;
  }
  {
    p.factor();
    const std::vector<double> x = p.solve(p.rhs());
    double infeas = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (p.artificial(p.basis()[r])) infeas += std::abs(x[r]);
    }
    if (infeas > 1e-9 * b_scale) {
      sol.status = Status::Infeasible;
      return sol;
    }
  }

  // Swap zero-level artificials for real columns where the row allows it;
  // rows that remain artificial are redundant.
  for (std::size_t r = 0; r < rows; ++r) {
    if (!p.artificial(p.basis()[r])) continue;
    p.factor();
    for (std::size_t j = 0; j < cols; ++j) {
      if (std::find(p.basis().begin(), p.basis().end(), j) != p.basis().end()) continue;
      const std::vector<double> u = p.solve(p.column(j));
      if (std::abs(u[r]) > piv_tol) {
        p.basis()[r] = j;
        break;
      }
    }
  }

  res = run_phase(p, [&](std::size_t j) { return p.cost(j); }, opts.optimality_tol * c_scale, piv_tol,
                  max_iter, sol.iterations);
  if (res == PhaseResult::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }
  if (res != PhaseResult::Optimal) {
    sol.status = Status::IterationLimit;
    return sol;
  }

  p.factor();
  const std::vector<double> x = p.solve(p.rhs());
  std::vector<double> cb(rows);
  for (std::size_t r = 0; r < rows; ++r) cb[r] = p.cost(p.basis()[r]);
  sol.duals = p.solve_transposed(cb);
  sol.x.assign(cols, 0.0);
  sol.basis.assign(rows, Solution::npos);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t j = p.basis()[r];
    if (j < cols) {
      sol.x[j] = std::max(x[r], 0.0);
      sol.basis[r] = j;
    }
  }
  sol.objective = 0.0;
  for (std::size_t j = 0; j < cols; ++j) sol.objective += c[j] * sol.x[j];
  sol.status = Status::Optimal;
  return sol;
}

}  // namespace chirality::lp
