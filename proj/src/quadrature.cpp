#include "plurikit/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "plurikit/errors.hpp"

namespace plurikit {

Quadrature1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw input_error("gauss_legendre: need n >= 1");
  if (!(a < b)) throw input_error("gauss_legendre: need a < b");

  Quadrature1D q;
  q.nodes.resize(static_cast<std::size_t>(n));
  q.weights.resize(static_cast<std::size_t>(n));

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-angle initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    q.nodes[static_cast<std::size_t>(i)] = x;
    q.weights[static_cast<std::size_t>(i)] = w;
    q.nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
    q.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }

  // Map [-1,1] -> [a,b].
  const double mid = 0.5 * (a + b), len = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.nodes[static_cast<std::size_t>(i)] = mid + len * q.nodes[static_cast<std::size_t>(i)];
    q.weights[static_cast<std::size_t>(i)] *= len;
  }
  return q;
}

DiscreteMeasure tensor_gauss_legendre(const std::vector<std::pair<double, double>>& box,
                                      int nodes_per_axis,
                                      const std::function<double(const PointC&)>& density) {
  if (box.empty()) throw input_error("tensor_gauss_legendre: empty box");
  const int dim = static_cast<int>(box.size());
  std::vector<Quadrature1D> rules;
  rules.reserve(box.size());
  for (const auto& [a, b] : box) rules.push_back(gauss_legendre(nodes_per_axis, a, b));

  std::vector<PointC> points;
  std::vector<double> masses;
  std::vector<std::size_t> counter(box.size(), 0);
  for (;;) {
    PointC p(box.size());
    double m = 1.0;
    for (int j = 0; j < dim; ++j) {
      p[static_cast<std::size_t>(j)] = Complex(rules[static_cast<std::size_t>(j)].nodes[counter[static_cast<std::size_t>(j)]], 0.0);
      m *= rules[static_cast<std::size_t>(j)].weights[counter[static_cast<std::size_t>(j)]];
    }
    if (density) m *= density(p);
    if (m > 0.0) {
      points.push_back(std::move(p));
      masses.push_back(m);
    }
    int j = dim - 1;
    for (; j >= 0; --j) {
      if (++counter[static_cast<std::size_t>(j)] < rules[static_cast<std::size_t>(j)].nodes.size()) break;
      counter[static_cast<std::size_t>(j)] = 0;
    }
    if (j < 0) break;
  }
  return DiscreteMeasure::create(dim, std::move(points), std::move(masses));
}

}  // namespace plurikit
