#include "plurikit/direction.hpp"

#include <cmath>

#include "plurikit/errors.hpp"

namespace plurikit {

Direction Direction::create(std::vector<double> theta) {
  if (theta.empty()) throw input_error("Direction: empty theta");
  double sum = 0.0;
  for (double t : theta) {
    if (!(t > 0.0)) throw input_error("Direction: entries must be strictly positive");
    sum += t;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw input_error("Direction: entries must sum to 1 (within 1e-12)");
  Direction d;
  d.theta = std::move(theta);
  return d;
}

MultiIndex direction_sequence(const Direction& theta, int j) {
  if (j < 1) throw input_error("direction_sequence: j must be >= 1");
  const int n = theta.dim();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  int used = 0;
  for (int k = 0; k + 1 < n; ++k) {
    exps[static_cast<std::size_t>(k)] =
        static_cast<int>(std::floor(j * theta.theta[static_cast<std::size_t>(k)]));
    used += exps[static_cast<std::size_t>(k)];
  }
  exps[static_cast<std::size_t>(n - 1)] = j - used;
  return MultiIndex(std::move(exps));
}

}  // namespace plurikit
