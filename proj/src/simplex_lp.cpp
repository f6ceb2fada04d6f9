#include "plurikit/simplex_lp.hpp"

#include <cmath>
#include <limits>

#include "plurikit/errors.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

namespace {

// Full-tableau state. Columns: [0, n) structural, [n, n+m) artificial.
struct Tableau {
  int m, n;
  std::vector<double> t;    // m x (n + m)
  std::vector<double> rhs;  // m
  std::vector<double> z;    // reduced costs, n + m
  double obj = 0.0;
  std::vector<int> basis;  // basic column per row

  int width() const { return n + m; }
  double& at(int r, int j) { return t[static_cast<std::size_t>(r) * static_cast<std::size_t>(width()) + static_cast<std::size_t>(j)]; }
  double at(int r, int j) const { return t[static_cast<std::size_t>(r) * static_cast<std::size_t>(width()) + static_cast<std::size_t>(j)]; }

  void pivot(int r, int q) {
    const int w = width();
    const double piv = at(r, q);
    for (int j = 0; j < w; ++j) at(r, j) /= piv;
    rhs[static_cast<std::size_t>(r)] /= piv;
    at(r, q) = 1.0;  // clean the pivot entry
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = at(i, q);
      if (f == 0.0) continue;
      for (int j = 0; j < w; ++j) at(i, j) -= f * at(r, j);
      at(i, q) = 0.0;
      rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(r)];
    }
    const double zq = z[static_cast<std::size_t>(q)];
    if (zq != 0.0) {
      for (int j = 0; j < w; ++j) z[static_cast<std::size_t>(j)] -= zq * at(r, j);
      z[static_cast<std::size_t>(q)] = 0.0;
      obj += zq * rhs[static_cast<std::size_t>(r)];
    }
    basis[static_cast<std::size_t>(r)] = q;
  }

  // Two-pass ratio test: find the minimum ratio, then among near-ties pick
  // the largest pivot element (keeps the basis well-conditioned under heavy
  // degeneracy). bland_mode instead resolves ties by the lowest basis index,
  // which restores the anti-cycling guarantee.
  int ratio_row(int q, bool bland_mode) const {
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int i = 0; i < m; ++i) {
      const double a = at(i, q);
      if (a <= tol::kSimplexPivotTol) continue;
      const double ratio = rhs[static_cast<std::size_t>(i)] / a;
      if (!found || ratio < best) {
        best = ratio;
        found = true;
      }
    }
    if (!found) return -1;
    const double slack = 1e-12 * (1.0 + std::abs(best));
    int r = -1;
    for (int i = 0; i < m; ++i) {
      const double a = at(i, q);
      if (a <= tol::kSimplexPivotTol) continue;
      if (rhs[static_cast<std::size_t>(i)] / a > best + slack) continue;
      if (r < 0) {
        r = i;
        continue;
      }
      if (bland_mode) {
        if (basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(r)]) r = i;
      } else if (a > at(r, q)) {
        r = i;
      }
    }
    return r;
  }

  // Entering column: Dantzig (largest reduced cost, ties to the lowest
  // index) while progress is being made; Bland (lowest improving index)
  // once degeneracy persists, which restores the termination guarantee.
  // Columns without an eligible pivot row are skipped.
  bool step(bool allow_artificial, double enter_eps, bool bland_mode) {
    const int limit = allow_artificial ? width() : n;
    if (bland_mode) {
      for (int q = 0; q < limit; ++q) {
        if (z[static_cast<std::size_t>(q)] <= enter_eps) continue;
        const int r = ratio_row(q, true);
        if (r >= 0) {
          pivot(r, q);
          return true;
        }
      }
      return false;
    }
    int q = -1;
    double bestz = enter_eps;
    for (int j = 0; j < limit; ++j) {
      if (z[static_cast<std::size_t>(j)] > bestz) {
        bestz = z[static_cast<std::size_t>(j)];
        q = j;
      }
    }
    if (q < 0) return false;
    const int r = ratio_row(q, false);
    if (r >= 0) {
      pivot(r, q);
      return true;
    }
    return step(allow_artificial, enter_eps, true);  // fall back to Bland scan
  }
};

}  // namespace

LpSolution solve_equality_lp(const EqualityLp& lp, int max_iter) {
  if (max_iter <= 0) max_iter = tol::kSimplexMaxIter;
  const int m = lp.rows, n = lp.cols;
  if (m < 1 || n < 1) throw input_error("simplex: empty problem");

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n + m), 0.0);
  tab.rhs.resize(static_cast<std::size_t>(m));
  tab.basis.resize(static_cast<std::size_t>(m));

  // Row equilibration by exact powers of two; artificial columns stay 1.
  std::vector<double> row_scale(static_cast<std::size_t>(m), 1.0);
  for (int i = 0; i < m; ++i) {
    double amax = std::abs(lp.b[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) amax = std::max(amax, std::abs(lp.at(i, j)));
    double s = 1.0;
    if (amax > 0.0) {
      int e = 0;
      std::frexp(amax, &e);
      s = std::ldexp(1.0, -e);  // scaled max lands in [0.5, 1)
    }
    if (lp.b[static_cast<std::size_t>(i)] < 0.0) s = -s;
    row_scale[static_cast<std::size_t>(i)] = s;
    for (int j = 0; j < n; ++j) tab.at(i, j) = s * lp.at(i, j);
    tab.at(i, n + i) = 1.0;
    tab.rhs[static_cast<std::size_t>(i)] = s * lp.b[static_cast<std::size_t>(i)];
    tab.basis[static_cast<std::size_t>(i)] = n + i;
  }

  LpSolution sol;

  // Phase 1: max -(sum of artificials).
  tab.z.assign(static_cast<std::size_t>(n + m), 0.0);
  tab.obj = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += tab.at(i, j);
    tab.z[static_cast<std::size_t>(j)] = s;
  }
  for (int i = 0; i < m; ++i) tab.obj -= tab.rhs[static_cast<std::size_t>(i)];

  int iters = 0;
  int degenerate_run = 0;
  bool bland = false;
  const int bland_trigger = 2 * m + 16;
  auto loop = [&](bool allow_artificial, double enter_eps) {
    degenerate_run = 0;
    bland = false;
    for (;;) {
      const double before = tab.obj;
      if (!tab.step(allow_artificial, enter_eps, bland)) return true;
      if (++iters > max_iter) return false;
      if (tab.obj > before) {
        degenerate_run = 0;
        bland = false;
      } else if (++degenerate_run > bland_trigger) {
        bland = true;
      }
    }
  };

  if (!loop(true, tol::kSimplexEnterTol)) sol.status = LpSolution::Status::iteration_limit;
  if (sol.status != LpSolution::Status::iteration_limit && tab.obj < -1e-8) {
    sol.status = LpSolution::Status::infeasible;
    sol.iterations = iters;
    return sol;
  }

  // Pivot leftover artificials out on the largest structural element.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n) continue;
    int jbest = -1;
    double abest = tol::kSimplexPivotTol;
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(tab.at(i, j));
      if (a > abest) {
        abest = a;
        jbest = j;
      }
    }
    if (jbest >= 0) tab.pivot(i, jbest);
  }

  // Phase 2: real costs. Rebuild reduced costs from scratch.
  double cmax = 1.0;
  for (int j = 0; j < n; ++j) cmax = std::max(cmax, std::abs(lp.c[static_cast<std::size_t>(j)]));
  const double enter_eps = tol::kSimplexEnterTol * cmax;

  auto cost_of = [&](int col) { return col < n ? lp.c[static_cast<std::size_t>(col)] : 0.0; };
  tab.obj = 0.0;
  for (int i = 0; i < m; ++i) tab.obj += cost_of(tab.basis[static_cast<std::size_t>(i)]) * tab.rhs[static_cast<std::size_t>(i)];
  for (int j = 0; j < n + m; ++j) {
    double zj = cost_of(j);
    for (int i = 0; i < m; ++i) zj -= cost_of(tab.basis[static_cast<std::size_t>(i)]) * tab.at(i, j);
    tab.z[static_cast<std::size_t>(j)] = zj;
  }
  for (int i = 0; i < m; ++i) tab.z[static_cast<std::size_t>(tab.basis[static_cast<std::size_t>(i)])] = 0.0;

  if (sol.status != LpSolution::Status::iteration_limit) {
    if (!loop(false, enter_eps)) sol.status = LpSolution::Status::iteration_limit;
  }

  sol.iterations = iters;
  sol.objective = tab.obj;
  sol.y.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n)
      sol.y[static_cast<std::size_t>(tab.basis[static_cast<std::size_t>(i)])] = tab.rhs[static_cast<std::size_t>(i)];
  }
  // pi for the scaled system from artificial reduced costs, then descale.
  sol.row_multipliers.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    sol.row_multipliers[static_cast<std::size_t>(i)] =
        -tab.z[static_cast<std::size_t>(n + i)] * row_scale[static_cast<std::size_t>(i)];
  return sol;
}

}  // namespace plurikit
