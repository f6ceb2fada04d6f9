#pragma once

#include <span>
#include <string>
#include <vector>

#include "plurikit/circular.hpp"
#include "plurikit/measure.hpp"
#include "plurikit/orthopoly.hpp"
#include "plurikit/poly.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

struct GreenMember {
  int d = 0;               // weighted degree
  double normalizer = 0.0;  // exact weighted sup norm on the generating set
  Poly p;                   // weighted/unweighted kinds
  HomogeneousPoly ph;       // homogeneous kind
};

/// Pointwise-sup family of normalized extremal polynomials. Every member is
/// admissible for the defining sup, so evaluation is a guaranteed lower
/// bound of the Green function it approximates.
struct GreenApprox {
  enum class Kind { unweighted, weighted, homogeneous };

  Kind kind = Kind::weighted;
  int dim = 0;  // ambient evaluation dimension (N, or N+1 for homogeneous)
  std::vector<GreenMember> family;
  std::string source;

  /// max over the family of (log|p(z)| - log normalizer) / d.
  double value(std::span<const Complex> z) const;
  std::pair<double, int> value_with_argmax(std::span<const Complex> z) const;

  /// max(0, value): the Green function of the circular set itself
  /// (meaningful for the homogeneous kind).
  double value_vz(std::span<const Complex> z) const;
};

/// Family: all L2(w^{2d} mu)-orthonormal polynomials for d <= d_max,
/// re-normalized by their exact weighted sup norms on E.
GreenApprox green_weighted(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                           int d_max);

/// Homogenizations of the green_weighted family of Z's base, re-normalized
/// by their exact sup norms over the lift samples. The overload without a
/// measure uses uniform masses on the base points.
GreenApprox green_homogeneous(const CircularSample& z, const DiscreteMeasure& base_mu,
                              int d_max);
GreenApprox green_homogeneous(const CircularSample& z, int d_max);

struct RobinTrace {
  std::vector<std::pair<double, double>> trace;  // (s, g(s z) - log s)
  double estimate = 0.0;                         // trace value at the largest s
};

/// g(s z) - log s along ascending s values; the caller inspects convergence.
RobinTrace robin_estimate(const GreenApprox& g, std::span<const Complex> z,
                          const std::vector<double>& s_list);

struct MonotonicityReport {
  bool ok = true;
  double max_violation = 0.0;
  std::vector<double> v_hi, v_lo;  // per probe
};

/// One shared polynomial family (built under w_lo) re-normalized under each
/// weight, so V(w_hi) <= V(w_lo) holds as pointwise float arithmetic.
MonotonicityReport weight_monotonicity_check(const WeightedSampleSet& set,
                                             const DiscreteMeasure& mu,
                                             const std::vector<double>& w_hi,
                                             const std::vector<double>& w_lo, int d_max,
                                             const std::vector<PointC>& probe_points);

}  // namespace plurikit
