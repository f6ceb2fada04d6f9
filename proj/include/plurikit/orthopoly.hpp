#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "plurikit/measure.hpp"
#include "plurikit/multi_index.hpp"
#include "plurikit/poly.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

/// Rows: sample points (mu order). Columns: monomials |beta| <= d, lex
/// ascending. Entry: sqrt(mass_i) * w(x_i)^d * x_i^beta, so the Gram matrix
/// of the monomials in L2(w^{2d} mu) is exactly V^H V.
struct WeightedVandermonde {
  std::vector<MultiIndex> basis;
  Eigen::MatrixXcd matrix;
  bool real_path = false;
};

WeightedVandermonde weighted_vandermonde(const WeightedSampleSet& set,
                                         const DiscreteMeasure& mu, int d);

/// Triangular factorization of the weighted Vandermonde. The diagonal entry
/// at column alpha is the minimal L2(w^{2d} mu) norm over monic polynomials
/// in the class of alpha; its reciprocal is the leading coefficient of the
/// orthonormal polynomial.
struct OrthoResult {
  int d = 0;
  std::vector<MultiIndex> basis_order;
  std::map<MultiIndex, double, LexLess> leading;    // |alpha| = d
  std::map<MultiIndex, double, LexLess> l2_minima;  // |alpha| = d
  double condition_estimate = 1.0;  // max diag / min diag of the factor

  Eigen::MatrixXcd r_factor;  // upper triangular, kept for reconstruction
  bool real_path = false;

  int column_of(const MultiIndex& alpha) const;
};

OrthoResult orthonormalize(const WeightedSampleSet& set, const DiscreteMeasure& mu, int d);

/// Monic L2 minimizer q^d_alpha reconstructed from the triangular factor.
Poly monic_l2_polynomial(const OrthoResult& r, const MultiIndex& alpha);

/// Orthonormal polynomial p^d_alpha (unit L2(w^{2d} mu) norm, positive
/// leading coefficient).
Poly orthonormal_polynomial(const OrthoResult& r, const MultiIndex& alpha);

/// max_i w(x_i)^d |p(x_i)|
double weighted_sup_norm(const WeightedSampleSet& set, const Poly& p, int d);

/// sqrt( sum_i mass_i w(x_i)^{2d} |p(x_i)|^2 ); mu must share E's points.
double weighted_l2_norm(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                        const Poly& p, int d);

/// Weighted sup norm over E of the monic L2-minimal polynomial.
double l2_optimal_sup_norm(const WeightedSampleSet& set, const DiscreteMeasure& mu, int d,
                           const MultiIndex& alpha);
double l2_optimal_sup_norm(const WeightedSampleSet& set, const OrthoResult& r,
                           const MultiIndex& alpha);

}  // namespace plurikit
