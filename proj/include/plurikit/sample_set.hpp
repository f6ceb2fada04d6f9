#pragma once

#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "plurikit/poly.hpp"

namespace plurikit {

using PointC = std::vector<Complex>;

/// Finite point cloud discretizing a compact set, with weight values.
/// Invariants (enforced on create): weights finite and >= 0, at least one
/// weight > 0, points pairwise distinct, real_only consistent.
struct WeightedSampleSet {
  int dim = 0;
  std::vector<PointC> points;
  std::vector<double> weights;
  bool real_only = false;

  static WeightedSampleSet create(int dim, std::vector<PointC> points,
                                  std::vector<double> weights);

  std::size_t size() const { return points.size(); }

  /// Q(x_i) = -log w(x_i); +inf where the weight vanishes.
  double q(std::size_t i) const;

  /// Same points, new weights (revalidated).
  WeightedSampleSet with_weights(std::vector<double> weights) const;
};

struct IntervalDomain {
  double a, b;
};
struct BoxDomain {
  std::vector<std::pair<double, double>> axes;  // [a_k, b_k] per axis
};
struct CircleDomain {};  // unit circle in C
struct TorusDomain {
  int dim = 2;  // product of unit circles
};
using DomainSpec = std::variant<IntervalDomain, BoxDomain, CircleDomain, TorusDomain>;

using WeightFn = std::function<double(const PointC&)>;

int domain_dim(const DomainSpec& spec);

/// Tensor grid over the domain with pointwise weights. resolution holds one
/// entry per axis (a single entry broadcasts). Each resolution must be >= 2.
WeightedSampleSet build_grid_set(const DomainSpec& spec, std::vector<int> resolution,
                                 const WeightFn& weight_fn);

}  // namespace plurikit
