#include "plurikit/measure.hpp"

#include <cmath>

#include "plurikit/errors.hpp"

namespace plurikit {

DiscreteMeasure DiscreteMeasure::create(int dim, std::vector<PointC> points,
                                        std::vector<double> masses) {
  if (dim < 1) throw input_error("DiscreteMeasure: dim must be >= 1");
  if (points.empty()) throw input_error("DiscreteMeasure: empty support");
  if (points.size() != masses.size())
    throw input_error("DiscreteMeasure: points/masses length mismatch");
  double total = 0.0;
  for (double m : masses) {
    if (!std::isfinite(m) || m <= 0.0)
      throw input_error("DiscreteMeasure: masses must be finite and > 0");
    total += m;
  }
  if (!std::isfinite(total) || total <= 0.0)
    throw input_error("DiscreteMeasure: total mass must be finite and > 0");
  for (const PointC& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw input_error("DiscreteMeasure: point dimension mismatch");
  }
  DiscreteMeasure mu;
  mu.dim = dim;
  mu.points = std::move(points);
  mu.masses = std::move(masses);
  mu.total = total;
  return mu;
}

DiscreteMeasure uniform_measure(const WeightedSampleSet& set) {
  std::vector<double> masses(set.size(), 1.0 / static_cast<double>(set.size()));
  return DiscreteMeasure::create(set.dim, set.points, std::move(masses));
}

void require_points_match(const WeightedSampleSet& set, const DiscreteMeasure& mu) {
  if (mu.dim != set.dim || mu.size() != set.size())
    throw input_error("measure/sample-set point mismatch");
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (mu.points[i] != set.points[i])
      throw input_error("measure/sample-set point mismatch");
  }
}

}  // namespace plurikit
