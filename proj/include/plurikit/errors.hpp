#pragma once

#include <stdexcept>
#include <string>

namespace plurikit {

/// Invalid input: bad domain/weight/measure specs, violated preconditions.
/// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical guard tripped (conditioning, non-convergence). Exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what, double condition_estimate = 0.0)
      : std::runtime_error(what), condition_estimate(condition_estimate) {}

  double condition_estimate;
};

}  // namespace plurikit
