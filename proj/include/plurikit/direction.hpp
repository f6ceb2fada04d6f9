#pragma once

#include <vector>

#include "plurikit/multi_index.hpp"

namespace plurikit {

/// Point of the open simplex: theta_j > 0, sum theta_j = 1 (within 1e-12).
struct Direction {
  std::vector<double> theta;

  static Direction create(std::vector<double> theta);
  int dim() const { return static_cast<int>(theta.size()); }
};

/// alpha(j) with |alpha(j)| = j and alpha(j)/j -> theta:
/// floor(j*theta_k) for k < N, remainder on the last coordinate.
MultiIndex direction_sequence(const Direction& theta, int j);

}  // namespace plurikit
