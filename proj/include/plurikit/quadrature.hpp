#pragma once

#include <functional>
#include <vector>

#include "plurikit/measure.hpp"

namespace plurikit {

struct Quadrature1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b] (Newton iteration on P_n).
Quadrature1D gauss_legendre(int n, double a, double b);

/// Tensor Gauss-Legendre measure on a box with an optional positive density
/// folded into the masses.
DiscreteMeasure tensor_gauss_legendre(const std::vector<std::pair<double, double>>& box,
                                      int nodes_per_axis,
                                      const std::function<double(const PointC&)>& density);

}  // namespace plurikit
