#pragma once

#include <vector>

namespace plurikit {

/// Dense equality-form LP:  max c^T y  s.t.  A y = b,  y >= 0.
struct EqualityLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major, rows x cols
  std::vector<double> b;  // rows
  std::vector<double> c;  // cols

  double& at(int r, int j) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  double at(int r, int j) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
};

struct LpSolution {
  enum class Status { optimal, iteration_limit, infeasible };
  Status status = Status::optimal;
  std::vector<double> y;                // length cols
  std::vector<double> row_multipliers;  // equality multipliers for the original rows
  double objective = 0.0;
  int iterations = 0;
};

/// Two-phase dense primal simplex, Bland's rule (lowest improving index;
/// leaving ties resolved by lowest basis index). Rows are pre-scaled by exact
/// powers of two, so solutions commute bitwise with power-of-two row scalings.
LpSolution solve_equality_lp(const EqualityLp& lp, int max_iter = 0);

}  // namespace plurikit
