#pragma once

#include <vector>

#include "plurikit/sample_set.hpp"

namespace plurikit {

/// Points plus strictly positive masses.
struct DiscreteMeasure {
  int dim = 0;
  std::vector<PointC> points;
  std::vector<double> masses;
  double total = 0.0;

  static DiscreteMeasure create(int dim, std::vector<PointC> points,
                                std::vector<double> masses);

  std::size_t size() const { return points.size(); }
};

/// Equal masses totalling 1 on the sample set's points.
DiscreteMeasure uniform_measure(const WeightedSampleSet& set);

/// Throws unless mu's points coincide with E's points in order and value.
void require_points_match(const WeightedSampleSet& set, const DiscreteMeasure& mu);

}  // namespace plurikit
