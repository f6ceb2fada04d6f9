#pragma once

#include <string>
#include <vector>

#include "plurikit/direction.hpp"
#include "plurikit/measure.hpp"
#include "plurikit/poly.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

/// Exponential-weight problem e^{-H(x)} dx with H a real polynomial,
/// positive away from 0 and homogeneous of degree gamma.
struct FreudProblem {
  Poly h;
  double gamma = 0.0;

  /// Validates real coefficients, term-degree homogeneity, and the sampled
  /// invariants (homogeneity on 20 random (c, x) pairs to 1e-9, positivity
  /// at 50 random x != 0).
  static FreudProblem create(Poly h);

  double eval(const PointC& x) const;  // real value of H
};

/// Parses sums of monomials with positive coefficients, e.g. "x^2",
/// "x1^4+x2^4", "2x^6". Variables are x (alias x1), x2, x3.
Poly parse_freud_polynomial(const std::string& text);

struct ScaleInfo {
  int d = 0;
  double scale = 0.0;  // s = d^{1/gamma}; orthogonality at degree d in x
                       // becomes the weight e^{-d H(y)/2} at y = x/s
};

ScaleInfo scale_problem(const FreudProblem& fp, int d);

/// Smallest half-integer R in [0.5, 100] whose spherical-shell tail bound
/// (with the monic growth factor r^{2d}) falls below tail_budget times the
/// full-range integral of the same majorant.
double truncation_radius(const FreudProblem& fp, int d, double tail_budget);

struct GridSpec {
  int resolution = 2001;       // per axis, for the minimax grid
  int quad_nodes_initial = 64;  // per axis, doubled until converged
  double tail_budget = 1e-12;
};

struct AsymptoticsReport {
  Direction theta;
  std::vector<int> js;
  std::vector<double> lhs;   // leading-coefficient side
  std::vector<double> rhs;   // 1 / (Tchebyshev d-th root)
  std::vector<double> gap;   // |lhs - rhs|
  std::vector<double> a_values;
  std::vector<double> radii;
  std::vector<double> condition_estimates;
  std::vector<int> quad_nodes;
  std::vector<double> quad_deltas;
  std::string partial_reason;  // nonempty when a numerical guard cut the trace
};

/// lhs = a^{1/d} = (1/l2_minimum)^{1/d} on the given (E, w, mu);
/// rhs = 1/dth_root from the minimax solve. Both traces estimate the same
/// limit when (E, w, mu) has the Bernstein-Markov property.
AsymptoticsReport leading_coefficient_trace(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                                const Direction& theta, const std::vector<int>& js);

/// Full exponential-weight pipeline: scale, truncate, quadrature with the
/// degree-folded weight, leading coefficient with the exact change-of-variables
/// constant, lhs = a^{1/d} d^{1/gamma}, rhs from the weighted minimax on the
/// truncated ball.
AsymptoticsReport exponential_weight_trace(const FreudProblem& fp, const Direction& theta,
                                const std::vector<int>& js, const GridSpec& grid);

/// Samples of E where Q - V falls below tol: a heuristic locator of the
/// weighted equilibrium support. Returns indices into E.
std::vector<std::size_t> estimate_contact_set(const WeightedSampleSet& set, int d_max,
                                              double tol);

}  // namespace plurikit
