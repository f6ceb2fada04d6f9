#include "plurikit/asymptotics.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "plurikit/errors.hpp"
#include "plurikit/extremal.hpp"
#include "plurikit/minimax.hpp"
#include "plurikit/orthopoly.hpp"
#include "plurikit/quadrature.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

double FreudProblem::eval(const PointC& x) const {
  return eval_poly(h, x).real();
}

FreudProblem FreudProblem::create(Poly h) {
  if (h.terms.empty()) throw input_error("FreudProblem: H must be a nonzero polynomial");
  if (!h.real_coefficients(0.0))
    throw input_error("FreudProblem: H must have real coefficients");
  const int gamma = h.degree();
  if (gamma < 1) throw input_error("FreudProblem: H must have positive degree");
  for (const auto& [alpha, c] : h.terms) {
    if (alpha.degree() != gamma)
      throw input_error("FreudProblem: H must be homogeneous (every term of degree " +
                        std::to_string(gamma) + ")");
  }

  FreudProblem fp;
  fp.h = std::move(h);
  fp.gamma = gamma;

  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> cdist(0.3, 2.0);
  const int n = fp.h.dim;

  auto random_point = [&]() {
    PointC x(static_cast<std::size_t>(n));
    double norm = 0.0;
    do {
      norm = 0.0;
      for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(j)] = Complex(unit(rng), 0.0);
        norm += std::norm(x[static_cast<std::size_t>(j)]);
      }
    } while (norm < 1e-4);
    return x;
  };

  for (int t = 0; t < 20; ++t) {
    const PointC x = random_point();
    const double c = cdist(rng);
    PointC cx(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) cx[j] = c * x[j];
    const double lhs = fp.eval(cx);
    const double rhs = std::pow(c, fp.gamma) * fp.eval(x);
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(lhs)))
      throw input_error("FreudProblem: homogeneity check failed");
  }
  for (int t = 0; t < 50; ++t) {
    const PointC x = random_point();
    if (!(fp.eval(x) > 0.0))
      throw input_error("FreudProblem: H must be positive away from the origin");
  }
  return fp;
}

Poly parse_freud_polynomial(const std::string& text) {
  // Grammar: term ('+' term)*; term: [coef]['*']? factor+;
  // factor: 'x' ['1'-'9'] ['^' int]. Coefficients must be positive.
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw input_error("freud: empty polynomial");

  struct Term {
    double coef;
    std::map<int, int> pows;  // variable index (1-based) -> exponent
    int maxvar;
  };
  std::vector<Term> terms;

  std::size_t pos = 0;
  auto parse_term = [&]() {
    Term t{1.0, {}, 1};
    // optional coefficient
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
    if (pos > start) {
      t.coef = std::stod(s.substr(start, pos - start));
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (!(t.coef > 0.0)) throw input_error("freud: coefficients must be positive");
    bool any = false;
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      int var = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        var = s[pos] - '0';
        if (var < 1 || var > 3) throw input_error("freud: variables are x/x1, x2, x3");
        ++pos;
      }
      int p = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw input_error("freud: missing exponent after '^'");
        p = std::stoi(s.substr(start, pos - start));
      }
      t.pows[var] += p;
      t.maxvar = std::max(t.maxvar, var);
      if (pos < s.size() && s[pos] == '*') ++pos;
      any = true;
    }
    if (!any && t.pows.empty())
      throw input_error("freud: cannot parse term (expected forms like x^2, 2x^4, x1^2+x2^2)");
    return t;
  };

  terms.push_back(parse_term());
  while (pos < s.size()) {
    if (s[pos] != '+')
      throw input_error("freud: cannot parse '" + s.substr(pos) + "' (only '+'-joined monomials)");
    ++pos;
    terms.push_back(parse_term());
  }

  int dim = 1;
  for (const Term& t : terms) dim = std::max(dim, t.maxvar);
  Poly p(dim);
  for (const Term& t : terms) {
    std::vector<int> exps(static_cast<std::size_t>(dim), 0);
    for (const auto& [var, pw] : t.pows) exps[static_cast<std::size_t>(var - 1)] = pw;
    MultiIndex alpha(std::move(exps));
    p.set(alpha, p.coeff(alpha) + Complex(t.coef, 0.0));
  }
  return p;
}

ScaleInfo scale_problem(const FreudProblem& fp, int d) {
  if (d < 1) throw input_error("scale_problem: d must be >= 1");
  ScaleInfo s;
  s.d = d;
  s.scale = std::pow(static_cast<double>(d), 1.0 / fp.gamma);
  return s;
}

namespace {

// min/max of H over the unit sphere via deterministic sampling.
std::pair<double, double> sphere_range(const FreudProblem& fp) {
  const int n = fp.h.dim;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  auto visit = [&](const PointC& u) {
    const double v = fp.eval(u);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  if (n == 1) {
    visit({Complex(1, 0)});
    visit({Complex(-1, 0)});
  } else if (n == 2) {
    for (int k = 0; k < 512; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 512;
      visit({Complex(std::cos(a), 0), Complex(std::sin(a), 0)});
    }
  } else {
    // Fibonacci sphere.
    const int count = 1024;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double y = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
      const double a = golden * k;
      visit({Complex(r * std::cos(a), 0), Complex(y, 0), Complex(r * std::sin(a), 0)});
    }
  }
  return {lo, hi};
}

double shell_area(int n) {
  // Surface measure of S^{N-1}: 2, 2 pi, 4 pi for N = 1, 2, 3.
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

// Upper bound of int_R^inf r^K e^{-c r^gamma} dr via r^gamma >= R^gamma +
// gamma R^{gamma-1}(r - R) (convex for gamma >= 1).
double tail_majorant(double r, int big_k, double c, double gamma) {
  const double lambda = c * gamma * std::pow(r, gamma - 1.0);
  double term = std::pow(r, big_k) / lambda;
  double sum = term;
  for (int k = 1; k <= big_k; ++k) {
    term *= (big_k - k + 1) / (lambda * r);
    sum += term;
  }
  return std::exp(-c * std::pow(r, gamma)) * sum;
}

double full_majorant(int big_k, double c, double gamma) {
  // int_0^inf r^K e^{-c r^gamma} dr = Gamma((K+1)/gamma) / (gamma c^{(K+1)/gamma})
  const double a = (big_k + 1) / gamma;
  return std::exp(std::lgamma(a) - a * std::log(c)) / gamma;
}

}  // namespace

double truncation_radius(const FreudProblem& fp, int d, double tail_budget) {
  if (d < 1) throw input_error("truncation_radius: d must be >= 1");
  if (!(tail_budget > 0.0 && tail_budget < 1.0))
    throw input_error("truncation_radius: tail budget must lie in (0, 1)");

  const double a = sphere_range(fp).first / 2.0;  // A = min H(u)/2 on |u| = 1
  if (!(a > 0.0)) throw input_error("truncation_radius: H not positive on the sphere");
  const int n = fp.h.dim;
  const double c = 2.0 * a * d;
  const int big_k = n - 1 + 2 * d;  // shell times monic growth r^{2d}

  const double reference = shell_area(n) * full_majorant(big_k, c, fp.gamma);
  for (double r = 0.5; r <= 100.0 + 1e-9; r += 0.5) {
    const double bound = shell_area(n) * tail_majorant(r, big_k, c, fp.gamma);
    if (bound <= tail_budget * reference) return r;
  }
  throw numeric_error(
      "truncation_radius: tail bound not achievable with R <= 100 (configuration error)");
}

AsymptoticsReport leading_coefficient_trace(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                                const Direction& theta, const std::vector<int>& js) {
  if (theta.dim() != set.dim) throw input_error("leading_coefficient_trace: theta dimension mismatch");
  int prev = 0;
  for (int j : js) {
    if (j < 1 || j <= prev) throw input_error("leading_coefficient_trace: js must be ascending, >= 1");
    prev = j;
  }

  AsymptoticsReport rep;
  rep.theta = theta;
  for (int j : js) {
    const MultiIndex alpha = direction_sequence(theta, j);
    const int d = alpha.degree();
    try {
      const OrthoResult r = orthonormalize(set, mu, d);
      const double l2min = r.l2_minima.at(alpha);
      const TchebyshevResult t = solve_minimax(set, alpha);
      rep.js.push_back(j);
      rep.a_values.push_back(1.0 / l2min);
      rep.lhs.push_back(std::exp(-std::log(l2min) / d));
      rep.rhs.push_back(1.0 / t.dth_root);
      rep.gap.push_back(std::abs(rep.lhs.back() - rep.rhs.back()));
      rep.radii.push_back(0.0);
      rep.condition_estimates.push_back(r.condition_estimate);
      rep.quad_nodes.push_back(0);
      rep.quad_deltas.push_back(0.0);
    } catch (const numeric_error& e) {
      rep.partial_reason = e.what();
      break;
    }
  }
  return rep;
}

AsymptoticsReport exponential_weight_trace(const FreudProblem& fp, const Direction& theta,
                                const std::vector<int>& js, const GridSpec& grid) {
  const int n = fp.h.dim;
  if (theta.dim() != n) throw input_error("exponential_weight_trace: theta dimension mismatch");
  if (n > 3) throw input_error("exponential_weight_trace: N <= 3 at desk scale");
  int prev = 0;
  for (int j : js) {
    if (j < 1 || j <= prev) throw input_error("exponential_weight_trace: js must be ascending, >= 1");
    prev = j;
  }

  // The minimax grid must contain the weighted equilibrium support of
  // e^{-H/2}; (3/A)^{1/gamma} leaves a comfortable margin over the
  // quadratic-field interval.
  const double a_min = sphere_range(fp).first / 2.0;
  const double support_floor = std::pow(3.0 / a_min, 1.0 / fp.gamma);

  AsymptoticsReport rep;
  rep.theta = theta;
  for (int j : js) {
    const MultiIndex alpha = direction_sequence(theta, j);
    const int d = alpha.degree();
    try {
      double radius = std::max(truncation_radius(fp, d, grid.tail_budget), support_floor);
      radius = std::ceil(radius * 2.0) / 2.0;

      std::vector<std::pair<double, double>> box(static_cast<std::size_t>(n), {-radius, radius});
      const auto density = [&](const PointC& y) { return std::exp(-d * fp.eval(y)); };

      // Convergence-doubling rule on the quadrature node count. The
      // acceptance floor widens with the triangular factor's conditioning:
      // below eps * cond the doubling deltas are factorization noise, not
      // quadrature error.
      double log_a_prev = 0.0, delta = 0.0, cond = 0.0;
      bool have_prev = false;
      int nodes = std::max(grid.quad_nodes_initial,
                           static_cast<int>(monomials_up_to(n, d).size()) + 8);
      double log_a = 0.0;
      for (;; nodes *= 2) {
        if (nodes > 8192)
          throw numeric_error("exponential_weight_trace: quadrature not converged at 8192 nodes/axis");
        const DiscreteMeasure quad = tensor_gauss_legendre(box, nodes, density);
        const WeightedSampleSet eq = WeightedSampleSet::create(
            n, quad.points, std::vector<double>(quad.size(), 1.0));
        OrthoResult r;
        try {
          r = orthonormalize(eq, quad, d);
        } catch (const numeric_error&) {
          // Too few effective nodes under the concentrated weight; refine.
          have_prev = false;
          continue;
        }
        cond = r.condition_estimate;
        const double m_d = r.l2_minima.at(alpha);
        // a^{-1} = d^{d/gamma} * d^{N/(2 gamma)} * m_d  (exact Jacobian kept)
        log_a = -(static_cast<double>(d) / fp.gamma + n / (2.0 * fp.gamma)) *
                    std::log(static_cast<double>(d)) -
                std::log(m_d);
        if (have_prev) {
          delta = std::abs(std::expm1(log_a - log_a_prev));
          const double floor =
              std::max(tol::kQuadDoublingRel,
                       8.0 * std::numeric_limits<double>::epsilon() * cond);
          if (delta < floor) break;
        }
        log_a_prev = log_a;
        have_prev = true;
      }

      // tau side: weighted minimax on the truncated ball grid.
      DomainSpec dom = n == 1 ? DomainSpec(IntervalDomain{-radius, radius})
                              : DomainSpec(BoxDomain{box});
      const WeightedSampleSet ball = build_grid_set(
          dom, {grid.resolution},
          [&](const PointC& y) { return std::exp(-fp.eval(y) / 2.0); });
      const TchebyshevResult t = solve_minimax(ball, alpha);

      rep.js.push_back(j);
      rep.a_values.push_back(std::exp(log_a));
      rep.lhs.push_back(std::exp(log_a / d + std::log(static_cast<double>(d)) / fp.gamma));
      rep.rhs.push_back(1.0 / t.dth_root);
      rep.gap.push_back(std::abs(rep.lhs.back() - rep.rhs.back()));
      rep.radii.push_back(radius);
      rep.condition_estimates.push_back(cond);
      rep.quad_nodes.push_back(nodes);
      rep.quad_deltas.push_back(delta);
    } catch (const numeric_error& e) {
      rep.partial_reason = e.what();
      break;
    }
  }
  return rep;
}

std::vector<std::size_t> estimate_contact_set(const WeightedSampleSet& set, int d_max,
                                              double tol) {
  if (tol < 0.0) throw input_error("estimate_contact_set: tol must be >= 0");
  const GreenApprox g = green_weighted(set, uniform_measure(set), d_max);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!(set.weights[i] > 0.0)) continue;
    const double gap = set.q(i) - g.value(set.points[i]);
    if (gap <= tol) out.push_back(i);
  }
  return out;
}

}  // namespace plurikit
