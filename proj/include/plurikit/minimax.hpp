#pragma once

#include <vector>

#include "plurikit/direction.hpp"
#include "plurikit/multi_index.hpp"
#include "plurikit/poly.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

/// Minimizer of max_i w(x_i)^d |q(x_i)| over monic q = z^alpha + lower terms.
struct TchebyshevResult {
  enum class Status { optimal, iteration_limit, degenerate };

  MultiIndex alpha;
  std::vector<MultiIndex> basis;      // lower_order_basis(alpha)
  std::vector<Complex> coefficients;  // aligned with basis
  double minimax_value = 0.0;
  double dth_root = 0.0;  // minimax_value^(1/|alpha|)
  Status status = Status::optimal;

  /// 1 on the real path; sec(pi/K) when the modulus constraints were
  /// polygonized with K half-planes.
  double certificate_factor = 1.0;

  double cs_residual = 0.0;  // complementary-slackness diagnostic
  int lp_iterations = 0;

  Poly polynomial() const;  // the monic minimizer as a Poly
};

const char* to_string(TchebyshevResult::Status s);

/// Linear-programming minimax over the sample set. Real-only sets solve the
/// exact LP; complex sets polygonize the modulus constraints.
TchebyshevResult solve_minimax(const WeightedSampleSet& set, const MultiIndex& alpha);

/// solve_minimax along direction_sequence(theta, j) for ascending j values.
std::vector<TchebyshevResult> tcheby_sequence(const WeightedSampleSet& set,
                                              const Direction& theta,
                                              const std::vector<int>& j_values);

}  // namespace plurikit
