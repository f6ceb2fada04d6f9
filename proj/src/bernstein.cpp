#include "plurikit/bernstein.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "plurikit/errors.hpp"
#include "plurikit/minimax.hpp"
#include "plurikit/orthopoly.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

namespace {

Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly out(a.dim);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> exps(static_cast<std::size_t>(a.dim));
      for (int j = 0; j < a.dim; ++j) exps[static_cast<std::size_t>(j)] = ea.e[static_cast<std::size_t>(j)] + eb.e[static_cast<std::size_t>(j)];
      MultiIndex key(std::move(exps));
      out.set(key, out.coeff(key) + ca * cb);
    }
  }
  return out;
}

double sup_over_l2(const WeightedSampleSet& set, const DiscreteMeasure& mu, const Poly& q,
                   int d) {
  const double sup = weighted_sup_norm(set, q, d);
  const double l2 = weighted_l2_norm(set, mu, q, d);
  if (!(l2 > 0.0)) throw numeric_error("bm_trace: vanishing L2 norm in family");
  return sup / l2;
}

}  // namespace

const char* to_string(BMFamily f) {
  switch (f) {
    case BMFamily::orthonormal: return "orthonormal";
    case BMFamily::tchebyshev: return "tchebyshev";
    default: return "random-monic";
  }
}

BMTrace bm_trace(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                 const std::vector<int>& d_list, BMFamily family, std::uint64_t seed) {
  int prev = 0;
  for (int d : d_list) {
    if (d < 1) throw input_error("bm_trace: degrees must be >= 1");
    if (d <= prev) throw input_error("bm_trace: degrees must be strictly ascending");
    prev = d;
  }

  BMTrace trace;
  trace.family = family;
  std::mt19937_64 rng(seed);

  for (int d : d_list) {
    double ratio = 0.0;
    if (family == BMFamily::orthonormal) {
      const OrthoResult r = orthonormalize(set, mu, d);
      for (const auto& [alpha, lead] : r.leading) {
        (void)lead;
        // L2 norms are 1 by construction, so the ratio is the sup norm.
        ratio = std::max(ratio, weighted_sup_norm(set, orthonormal_polynomial(r, alpha), d));
      }
    } else if (family == BMFamily::tchebyshev) {
      for (const MultiIndex& alpha : monomials_up_to(set.dim, d)) {
        if (alpha.degree() != d) continue;
        const TchebyshevResult t = solve_minimax(set, alpha);
        ratio = std::max(ratio, sup_over_l2(set, mu, t.polynomial(), d));
      }
    } else {
      std::normal_distribution<double> normal(0.0, 1.0);
      for (const MultiIndex& alpha : monomials_up_to(set.dim, d)) {
        if (alpha.degree() != d) continue;
        Poly q(set.dim);
        q.set(alpha, Complex(1.0, 0.0));
        for (const MultiIndex& beta : lower_order_basis(alpha)) {
          const double re = normal(rng);
          const double im = set.real_only ? 0.0 : normal(rng);
          q.set(beta, Complex(re, im));
        }
        ratio = std::max(ratio, sup_over_l2(set, mu, q, d));
      }
    }
    trace.degrees.push_back(d);
    trace.ratios.push_back(ratio);
    trace.dth_roots.push_back(std::pow(ratio, 1.0 / d));
  }
  return trace;
}

SplitCheckReport homogeneous_split_check(const CircularSample& z, const DiscreteMeasure& nu,
                                         const Poly& p, int m) {
  if (p.dim != z.base.dim + 1)
    throw input_error("homogeneous_split_check: p must live in N+1 variables");
  if (m != z.circle_points)
    throw input_error("homogeneous_split_check: m does not match the lift");
  if (nu.dim != p.dim || nu.size() != z.samples.size())
    throw input_error("homogeneous_split_check: nu does not match the lift samples");
  const int deg = p.degree();
  if (!(m > 2 * deg))
    throw input_error(
        "homogeneous_split_check: discrete circle exactness requires m > 2*deg(p) "
        "(use m >= 2d+1); degree " +
        std::to_string(deg) + " needs m >= " + std::to_string(2 * deg + 1));

  // Split into homogeneous parts by total degree.
  std::map<int, Poly> parts;
  for (const auto& [alpha, c] : p.terms) {
    auto [it, inserted] = parts.try_emplace(alpha.degree(), Poly(p.dim));
    it->second.set(alpha, c);
  }

  auto l2sq_nu = [&](const Poly& q) {
    double sum = 0.0;
    for (std::size_t s = 0; s < z.samples.size(); ++s) {
      const double av = std::abs(eval_poly(q, z.samples[s]));
      sum += nu.masses[s] * av * av;
    }
    return sum;
  };

  SplitCheckReport rep;
  rep.degree = deg;

  const double whole = l2sq_nu(p);
  double parts_sum = 0.0;
  for (const auto& [dd, part] : parts) parts_sum += l2sq_nu(part);
  rep.pythagoras_residual = std::abs(whole - parts_sum) / std::max(whole, 1e-300);

  // Recover the base measure: each base point's mass is the sum over its circle.
  std::vector<double> base_mass(z.base.size(), 0.0);
  for (std::size_t s = 0; s < z.samples.size(); ++s) base_mass[z.base_index[s]] += nu.masses[s];

  for (const auto& [dd, part] : parts) {
    // Part as P_d = homogenize(G_d, d) with G_d = P_d(1, .).
    HomogeneousPoly pd;
    pd.dim = p.dim;
    pd.degree = dd;
    pd.terms = part.terms;
    const Poly gd = dehomogenize(pd);

    const double lhs = std::sqrt(l2sq_nu(part));
    double rhs_sq = 0.0;
    for (std::size_t i = 0; i < z.base.size(); ++i) {
      if (base_mass[i] == 0.0) continue;
      double wd = 1.0;
      for (int k = 0; k < dd; ++k) wd *= z.base.weights[i];
      const double av = wd * std::abs(eval_poly(gd, z.base.points[i]));
      rhs_sq += base_mass[i] * av * av;
    }
    const double rhs = std::sqrt(rhs_sq);
    const double resid = std::abs(lhs - rhs) / std::max({lhs, rhs, 1e-300});
    rep.lift_l2_max_residual = std::max(rep.lift_l2_max_residual, resid);
  }
  return rep;
}

WeierstrassResult weierstrass_surrogate(const WeightedSampleSet& set, double eps) {
  if (!set.real_only)
    throw input_error("weierstrass_surrogate: requires a real-only sample set");
  if (!(eps > 0.0 && eps < 0.1))
    throw input_error("weierstrass_surrogate: eps must lie in (0, 0.1)");
  for (double w : set.weights) {
    if (!(w > 0.0))
      throw input_error("weierstrass_surrogate: requires strictly positive weights");
  }

  std::vector<double> logw(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) logw[i] = std::log(set.weights[i]);

  // Least-squares fit of log w by monomials, degree escalated until the
  // sup-norm residual fits inside eps. Same factorization engine as
  // orthonormalize: unweighted Vandermonde over uniform masses.
  const DiscreteMeasure uniform = uniform_measure(set);
  const WeightedSampleSet unit = set.with_weights(std::vector<double>(set.size(), 1.0));

  WeierstrassResult out;
  bool fitted = false;
  for (int deg = 0; deg <= tol::kWeierstrassMaxFitDegree; ++deg) {
    const std::size_t ncols = monomials_up_to(set.dim, deg).size();
    if (ncols > set.size()) break;  // cannot exceed the sample count
    const WeightedVandermonde v = weighted_vandermonde(unit, uniform, deg);
    Eigen::MatrixXd a = v.matrix.real();
    Eigen::VectorXd y(static_cast<Eigen::Index>(set.size()));
    for (std::size_t i = 0; i < set.size(); ++i)
      y(static_cast<Eigen::Index>(i)) = std::sqrt(uniform.masses[i]) * logw[i];
    Eigen::VectorXd c = Eigen::HouseholderQR<Eigen::MatrixXd>(a).solve(y);

    Poly g(set.dim);
    for (std::size_t k = 0; k < v.basis.size(); ++k)
      g.set(v.basis[k], Complex(c(static_cast<Eigen::Index>(k)), 0.0));

    double resid = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i)
      resid = std::max(resid, std::abs(logw[i] - eval_poly(g, set.points[i]).real()));
    if (resid <= eps) {
      out.g = std::move(g);
      out.g_degree = deg;
      fitted = true;
      break;
    }
  }
  if (!fitted)
    throw numeric_error(
        "weierstrass_surrogate: cannot approximate log w within eps by degree <= 50 "
        "(weight too rough for this surrogate)");

  // H = truncated exponential series of g, extended until the certified
  // sandwich holds on the samples.
  Poly h(set.dim);
  h.set(MultiIndex(std::vector<int>(static_cast<std::size_t>(set.dim), 0)), Complex(1.0, 0.0));
  Poly term = h;  // g^k / k!
  for (int k = 1; k <= tol::kWeierstrassMaxExpTerms; ++k) {
    term = poly_multiply(term, out.g);
    for (auto& [alpha, c] : term.terms) c /= static_cast<double>(k);
    for (const auto& [alpha, c] : term.terms) h.set(alpha, h.coeff(alpha) + c);

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    bool valid = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const double hv = std::abs(eval_poly(h, set.points[i]));
      if (!(hv > 0.0)) {
        valid = false;
        break;
      }
      const double r = set.weights[i] / hv;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (valid && lo >= 1.0 - 2.0 * eps && hi <= 1.0 + 2.0 * eps) {
      out.h = std::move(h);
      out.band_lo = lo;
      out.band_hi = hi;
      out.exp_terms = k;
      return out;
    }
  }
  throw numeric_error(
      "weierstrass_surrogate: exponential truncation did not reach the sandwich band");
}

}  // namespace plurikit
