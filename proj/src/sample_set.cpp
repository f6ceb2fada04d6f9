#include "plurikit/sample_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "plurikit/errors.hpp"

namespace plurikit {

namespace {

bool point_less(const PointC& a, const PointC& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

WeightedSampleSet WeightedSampleSet::create(int dim, std::vector<PointC> points,
                                            std::vector<double> weights) {
  if (dim < 1) throw input_error("WeightedSampleSet: dim must be >= 1");
  if (points.empty()) throw input_error("WeightedSampleSet: empty point set");
  if (points.size() != weights.size())
    throw input_error("WeightedSampleSet: points/weights length mismatch");

  bool any_positive = false;
  for (double w : weights) {
    if (!std::isfinite(w)) throw input_error("WeightedSampleSet: non-finite weight");
    if (w < 0.0) throw input_error("WeightedSampleSet: negative weight");
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive)
    throw input_error("WeightedSampleSet: admissibility requires some weight > 0");

  bool real = true;
  for (const PointC& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw input_error("WeightedSampleSet: point dimension mismatch");
    for (const Complex& c : p) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw input_error("WeightedSampleSet: non-finite coordinate");
      if (c.imag() != 0.0) real = false;
    }
  }

  // Pairwise-distinct check via sorted index view.
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return point_less(points[a], points[b]); });
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    if (points[idx[k]] == points[idx[k + 1]])
      throw input_error("WeightedSampleSet: points must be pairwise distinct");
  }

  WeightedSampleSet s;
  s.dim = dim;
  s.points = std::move(points);
  s.weights = std::move(weights);
  s.real_only = real;
  return s;
}

double WeightedSampleSet::q(std::size_t i) const {
  const double w = weights[i];
  return w > 0.0 ? -std::log(w) : std::numeric_limits<double>::infinity();
}

WeightedSampleSet WeightedSampleSet::with_weights(std::vector<double> w) const {
  return create(dim, points, std::move(w));
}

int domain_dim(const DomainSpec& spec) {
  if (std::holds_alternative<IntervalDomain>(spec)) return 1;
  if (std::holds_alternative<CircleDomain>(spec)) return 1;
  if (const auto* box = std::get_if<BoxDomain>(&spec))
    return static_cast<int>(box->axes.size());
  return std::get<TorusDomain>(spec).dim;
}

WeightedSampleSet build_grid_set(const DomainSpec& spec, std::vector<int> resolution,
                                 const WeightFn& weight_fn) {
  const int dim = domain_dim(spec);
  if (dim < 1) throw input_error("build_grid_set: empty domain");
  if (resolution.size() == 1 && dim > 1) resolution.assign(static_cast<std::size_t>(dim), resolution[0]);
  if (static_cast<int>(resolution.size()) != dim)
    throw input_error("build_grid_set: one resolution entry per axis required");
  for (int r : resolution) {
    if (r < 2) throw input_error("build_grid_set: resolution must be >= 2 per axis");
  }

  // Per-axis 1D node lists; the grid is their tensor product.
  std::vector<std::vector<Complex>> axes(static_cast<std::size_t>(dim));
  bool real = true;
  if (const auto* iv = std::get_if<IntervalDomain>(&spec)) {
    if (!(iv->a < iv->b)) throw input_error("build_grid_set: interval requires a < b");
    const int n = resolution[0];
    for (int k = 0; k < n; ++k)
      axes[0].push_back(Complex(iv->a + (iv->b - iv->a) * k / (n - 1), 0.0));
  } else if (const auto* box = std::get_if<BoxDomain>(&spec)) {
    for (int j = 0; j < dim; ++j) {
      const auto [a, b] = box->axes[static_cast<std::size_t>(j)];
      if (!(a < b)) throw input_error("build_grid_set: box axis requires a < b");
      const int n = resolution[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k)
        axes[static_cast<std::size_t>(j)].push_back(Complex(a + (b - a) * k / (n - 1), 0.0));
    }
  } else {
    real = false;
    for (int j = 0; j < dim; ++j) {
      const int n = resolution[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / n;
        axes[static_cast<std::size_t>(j)].push_back(std::polar(1.0, phi));
      }
    }
  }
  (void)real;

  std::vector<PointC> points;
  std::vector<std::size_t> counter(static_cast<std::size_t>(dim), 0);
  for (;;) {
    PointC p(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) p[static_cast<std::size_t>(j)] = axes[static_cast<std::size_t>(j)][counter[static_cast<std::size_t>(j)]];
    points.push_back(std::move(p));
    int j = dim - 1;
    for (; j >= 0; --j) {
      if (++counter[static_cast<std::size_t>(j)] < axes[static_cast<std::size_t>(j)].size()) break;
      counter[static_cast<std::size_t>(j)] = 0;
    }
    if (j < 0) break;
  }

  std::vector<double> weights;
  weights.reserve(points.size());
  for (const PointC& p : points) {
    const double w = weight_fn(p);
    if (!std::isfinite(w)) throw input_error("build_grid_set: non-finite weight value");
    if (w < 0.0) throw input_error("build_grid_set: negative weight value");
    weights.push_back(w);
  }
  return WeightedSampleSet::create(dim, std::move(points), std::move(weights));
}

}  // namespace plurikit
