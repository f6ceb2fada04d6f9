#include "plurikit/circular.hpp"

#include <cmath>
#include <numbers>

#include "plurikit/errors.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

CircularSample lift_circular(const WeightedSampleSet& set, int m) {
  if (m < 1) throw input_error("lift_circular: m must be >= 1");
  CircularSample z;
  z.base = set;
  z.circle_points = m;
  const int n = set.dim;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double w = set.weights[i];
    if (w == 0.0) continue;  // degenerate circle at the origin carries no norm
    for (int k = 0; k < m; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / m;
      const Complex t = std::polar(w, phi);
      PointC s(static_cast<std::size_t>(n) + 1);
      s[0] = t;
      for (int j = 0; j < n; ++j)
        s[static_cast<std::size_t>(j) + 1] = set.points[i][static_cast<std::size_t>(j)] * t;
      z.samples.push_back(std::move(s));
      z.base_index.push_back(i);
    }
  }
  return z;
}

DiscreteMeasure product_measure(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                                int m) {
  if (m < 1) throw input_error("product_measure: m must be >= 1");
  require_points_match(set, mu);
  for (double w : set.weights) {
    if (w == 0.0)
      throw input_error(
          "product_measure: zero-weight base point (its circle degenerates to the "
          "origin); restrict E to strictly positive weights first");
  }
  CircularSample z = lift_circular(set, m);
  std::vector<double> masses;
  masses.reserve(z.samples.size());
  for (std::size_t s = 0; s < z.samples.size(); ++s)
    masses.push_back(mu.masses[z.base_index[s]] / m);
  return DiscreteMeasure::create(set.dim + 1, z.samples, std::move(masses));
}

WeightedSampleSet extract_weight(const std::vector<PointC>& samples) {
  if (samples.empty()) throw input_error("extract_weight: empty sample list");
  const int np1 = static_cast<int>(samples[0].size());
  if (np1 < 2) throw input_error("extract_weight: samples must live in C^{N+1}, N >= 1");

  struct Group {
    PointC lambda;
    double w;
  };
  std::vector<Group> groups;

  auto same_lambda = [&](const PointC& a, const PointC& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double scale = std::max({std::abs(a[j]), std::abs(b[j]), 1.0});
      if (std::abs(a[j] - b[j]) > tol::kLambdaGroupingRel * scale) return false;
    }
    return true;
  };

  for (const PointC& s : samples) {
    if (static_cast<int>(s.size()) != np1)
      throw input_error("extract_weight: inconsistent sample dimensions");
    const Complex t = s[0];
    const double at = std::abs(t);
    if (at == 0.0) continue;  // projection undefined at t = 0
    PointC lambda(static_cast<std::size_t>(np1) - 1);
    for (int j = 1; j < np1; ++j) lambda[static_cast<std::size_t>(j) - 1] = s[static_cast<std::size_t>(j)] / t;

    bool found = false;
    for (Group& g : groups) {
      if (same_lambda(g.lambda, lambda)) {
        if (at > g.w) {
          g.w = at;
          g.lambda = lambda;  // keep the representative of the largest |t|
        }
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({std::move(lambda), at});
  }

  if (groups.empty())
    throw input_error("extract_weight: all samples have t = 0, nothing to project");

  std::vector<PointC> points;
  std::vector<double> weights;
  points.reserve(groups.size());
  for (Group& g : groups) {
    points.push_back(std::move(g.lambda));
    weights.push_back(g.w);
  }
  return WeightedSampleSet::create(np1 - 1, std::move(points), std::move(weights));
}

}  // namespace plurikit
