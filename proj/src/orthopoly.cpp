#include "plurikit/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plurikit/errors.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

namespace {

double pow_repeated(double w, int d) {
  double out = 1.0;
  for (int i = 0; i < d; ++i) out *= w;
  return out;
}

// Per-point coordinate power table up to the needed degree.
std::vector<std::vector<Complex>> power_table(const PointC& x, int d) {
  std::vector<std::vector<Complex>> pows(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    pows[j].resize(static_cast<std::size_t>(d) + 1);
    pows[j][0] = Complex(1.0, 0.0);
    for (int k = 1; k <= d; ++k) pows[j][static_cast<std::size_t>(k)] = pows[j][static_cast<std::size_t>(k - 1)] * x[j];
  }
  return pows;
}

}  // namespace

WeightedVandermonde weighted_vandermonde(const WeightedSampleSet& set,
                                         const DiscreteMeasure& mu, int d) {
  if (d < 0) throw input_error("weighted_vandermonde: degree must be >= 0");
  require_points_match(set, mu);

  WeightedVandermonde v;
  v.basis = monomials_up_to(set.dim, d);
  v.real_path = set.real_only;
  const auto rows = static_cast<Eigen::Index>(set.size());
  const auto cols = static_cast<Eigen::Index>(v.basis.size());
  if (rows < cols)
    throw input_error(
        "weighted_vandermonde: fewer sample points than monomials; the columns "
        "cannot be independent in L2 (need |E| >= C(d+N,N))");

  v.matrix.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double scale = std::sqrt(mu.masses[idx]) * pow_repeated(set.weights[idx], d);
    const auto pows = power_table(set.points[idx], d);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const MultiIndex& beta = v.basis[static_cast<std::size_t>(c)];
      Complex mono(1.0, 0.0);
      for (int j = 0; j < set.dim; ++j) mono *= pows[static_cast<std::size_t>(j)][static_cast<std::size_t>(beta.e[static_cast<std::size_t>(j)])];
      v.matrix(i, c) = scale * mono;
    }
  }
  return v;
}

int OrthoResult::column_of(const MultiIndex& alpha) const {
  const auto it = std::lower_bound(basis_order.begin(), basis_order.end(), alpha, LexLess{});
  if (it == basis_order.end() || !(*it == alpha))
    throw input_error("OrthoResult: multi-index outside the basis");
  return static_cast<int>(it - basis_order.begin());
}

OrthoResult orthonormalize(const WeightedSampleSet& set, const DiscreteMeasure& mu, int d) {
  WeightedVandermonde v = weighted_vandermonde(set, mu, d);
  const auto cols = static_cast<Eigen::Index>(v.basis.size());

  OrthoResult res;
  res.d = d;
  res.basis_order = std::move(v.basis);
  res.real_path = v.real_path;

  if (v.real_path) {
    Eigen::MatrixXd a = v.matrix.real();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    res.r_factor = r.cast<Complex>();
  } else {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v.matrix);
    res.r_factor = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  }

  double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    const double rd = std::abs(res.r_factor(c, c));
    dmin = std::min(dmin, rd);
    dmax = std::max(dmax, rd);
  }
  res.condition_estimate = dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity();
  if (!(dmin > tol::kQrDiagGuardRel * dmax))
    throw numeric_error(
        "orthonormalize: numerically dependent columns (triangular diagonal below "
        "1e-13 of the largest); refine the sample set or lower the degree",
        res.condition_estimate);

  for (Eigen::Index c = 0; c < cols; ++c) {
    const MultiIndex& alpha = res.basis_order[static_cast<std::size_t>(c)];
    if (alpha.degree() != d) continue;
    const double rd = std::abs(res.r_factor(c, c));
    res.l2_minima[alpha] = rd;
    res.leading[alpha] = 1.0 / rd;
  }
  return res;
}

Poly monic_l2_polynomial(const OrthoResult& r, const MultiIndex& alpha) {
  const int k = r.column_of(alpha);
  Poly q(alpha.dim());
  q.set(alpha, Complex(1.0, 0.0));
  if (k > 0) {
    const auto head = r.r_factor.topLeftCorner(k, k);
    Eigen::VectorXcd rhs = -r.r_factor.col(k).head(k);
    Eigen::VectorXcd c = head.triangularView<Eigen::Upper>().solve(rhs);
    for (int j = 0; j < k; ++j) q.set(r.basis_order[static_cast<std::size_t>(j)], c(j));
  }
  return q;
}

Poly orthonormal_polynomial(const OrthoResult& r, const MultiIndex& alpha) {
  const int k = r.column_of(alpha);
  const Complex rkk = r.r_factor(k, k);
  const Complex gamma = rkk / std::abs(rkk);  // makes the leading coefficient positive
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(k + 1);
  e(k) = gamma;
  const auto head = r.r_factor.topLeftCorner(k + 1, k + 1);
  Eigen::VectorXcd u = head.triangularView<Eigen::Upper>().solve(e);
  Poly p(alpha.dim());
  for (int j = 0; j <= k; ++j) p.set(r.basis_order[static_cast<std::size_t>(j)], u(j));
  return p;
}

double weighted_sup_norm(const WeightedSampleSet& set, const Poly& p, int d) {
  double best = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double v = pow_repeated(set.weights[i], d) * std::abs(eval_poly(p, set.points[i]));
    best = std::max(best, v);
  }
  return best;
}

double weighted_l2_norm(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                        const Poly& p, int d) {
  require_points_match(set, mu);
  double sum = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double wd = pow_repeated(set.weights[i], d);
    const double av = std::abs(eval_poly(p, set.points[i]));
    sum += mu.masses[i] * wd * wd * av * av;
  }
  return std::sqrt(sum);
}

double l2_optimal_sup_norm(const WeightedSampleSet& set, const OrthoResult& r,
                           const MultiIndex& alpha) {
  return weighted_sup_norm(set, monic_l2_polynomial(r, alpha), r.d);
}

double l2_optimal_sup_norm(const WeightedSampleSet& set, const DiscreteMeasure& mu, int d,
                           const MultiIndex& alpha) {
  return l2_optimal_sup_norm(set, orthonormalize(set, mu, d), alpha);
}

}  // namespace plurikit
