#pragma once

#include <vector>

#include "plurikit/measure.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

/// Sampled circular lift of (E, w): over each base point lambda with
/// w(lambda) > 0 sits a circle of m points (t, lambda_1 t, ..., lambda_N t)
/// with t = w(lambda) e^{2 pi i k / m}.
struct CircularSample {
  WeightedSampleSet base;
  int circle_points = 0;  // m
  std::vector<PointC> samples;        // dimension N+1, first coordinate t
  std::vector<std::size_t> base_index;  // sample -> generating base point
};

CircularSample lift_circular(const WeightedSampleSet& set, int m);

/// dm_lambda (normalized to mass 1 on each circle) tensor mu: every lifted
/// sample of base point i carries mass masses[i]/m. Requires mu's points to
/// coincide with E's and every weight strictly positive.
DiscreteMeasure product_measure(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                                int m);

/// Groups (N+1)-dimensional samples by lambda = z/t (relative tolerance
/// 1e-9 per coordinate, samples with t = 0 skipped) and returns
/// w(lambda) = max |t| per group.
WeightedSampleSet extract_weight(const std::vector<PointC>& samples);

}  // namespace plurikit
