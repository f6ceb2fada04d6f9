#include "plurikit/minimax.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "plurikit/errors.hpp"
#include "plurikit/simplex_lp.hpp"
#include "plurikit/tolerances.hpp"

namespace plurikit {

namespace {

Complex power(Complex z, int k) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

Complex monomial_at(const PointC& x, const MultiIndex& beta) {
  Complex out(1.0, 0.0);
  for (int j = 0; j < beta.dim(); ++j) out *= power(x[static_cast<std::size_t>(j)], beta.e[static_cast<std::size_t>(j)]);
  return out;
}

double pow_repeated(double w, int d) {
  double out = 1.0;
  for (int i = 0; i < d; ++i) out *= w;
  return out;
}

}  // namespace

Poly TchebyshevResult::polynomial() const {
  Poly p(alpha.dim());
  p.set(alpha, Complex(1.0, 0.0));
  for (std::size_t k = 0; k < basis.size(); ++k) p.set(basis[k], coefficients[k]);
  return p;
}

const char* to_string(TchebyshevResult::Status s) {
  switch (s) {
    case TchebyshevResult::Status::optimal: return "optimal";
    case TchebyshevResult::Status::iteration_limit: return "iteration-limit";
    default: return "degenerate";
  }
}

TchebyshevResult solve_minimax(const WeightedSampleSet& set, const MultiIndex& alpha) {
  if (alpha.dim() != set.dim) throw input_error("solve_minimax: alpha dimension mismatch");
  const int d = alpha.degree();
  if (d < 1) throw input_error("solve_minimax: |alpha| must be >= 1");

  TchebyshevResult res;
  res.alpha = alpha;
  res.basis = lower_order_basis(alpha);
  const int nb = static_cast<int>(res.basis.size());

  // Zero-weight points only contribute the vacuous constraint 0 <= u.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.weights[i] > 0.0) active.push_back(i);
  }
  const int na = static_cast<int>(active.size());

  // Weighted value columns: v_alpha = w^d x^alpha, m_low(:,b) = w^d x^beta_b.
  Eigen::MatrixXcd m_low(na, nb);
  Eigen::VectorXcd v_alpha(na);
  for (int k = 0; k < na; ++k) {
    const PointC& x = set.points[active[static_cast<std::size_t>(k)]];
    const double wd = pow_repeated(set.weights[active[static_cast<std::size_t>(k)]], d);
    v_alpha(k) = wd * monomial_at(x, alpha);
    for (int b = 0; b < nb; ++b) m_low(k, b) = wd * monomial_at(x, res.basis[static_cast<std::size_t>(b)]);
  }

  // The LP runs in an orthonormalized value basis of the lower-order span:
  // the minimax value only sees q's values on the samples, and the raw
  // monomial columns are too ill-conditioned at high degree. Numerically
  // dependent columns are dropped (the class only shrinks).
  const int nq = std::min(na, nb);
  Eigen::MatrixXcd thin_q;
  Eigen::MatrixXcd r_full;
  if (set.real_only) {
    Eigen::MatrixXd m_real = m_low.real();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m_real);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(na, nq);
    Eigen::MatrixXd r = qr.matrixQR().topRows(nq).triangularView<Eigen::Upper>();
    thin_q = q.cast<Complex>();
    r_full = r.cast<Complex>();
  } else {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m_low);
    thin_q = qr.householderQ() * Eigen::MatrixXcd::Identity(na, nq);
    r_full = qr.matrixQR().topRows(nq).triangularView<Eigen::Upper>();
  }

  double rmax = 0.0;
  for (int j = 0; j < nq; ++j) rmax = std::max(rmax, std::abs(r_full(j, j)));
  std::vector<int> kept;
  for (int j = 0; j < nq; ++j) {
    if (std::abs(r_full(j, j)) > 1e-12 * rmax) kept.push_back(j);
  }
  const int nkept = static_cast<int>(kept.size());

  // Dual LP of  min u  s.t.  +-(projections of w^d q) <= u: columns weight
  // pointwise constraints, rows kill the basis-function moments and
  // normalize the total weight to 1.
  const bool real_path = set.real_only;
  const int kK = tol::kComplexHalfplanes;
  const int n_real_coeffs = real_path ? nkept : 2 * nkept;
  EqualityLp lp;
  if (real_path) {
    lp.rows = nkept + 1;
    lp.cols = 2 * na;
    lp.a.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0.0);
    lp.b.assign(static_cast<std::size_t>(lp.rows), 0.0);
    lp.c.assign(static_cast<std::size_t>(lp.cols), 0.0);
    lp.b[static_cast<std::size_t>(nkept)] = 1.0;
    for (int k = 0; k < na; ++k) {
      for (int s = 0; s < 2; ++s) {
        const double sign = s == 0 ? 1.0 : -1.0;
        const int col = 2 * k + s;
        for (int j = 0; j < nkept; ++j)
          lp.at(j, col) = sign * thin_q(k, kept[static_cast<std::size_t>(j)]).real();
        lp.at(nkept, col) = 1.0;
        lp.c[static_cast<std::size_t>(col)] = sign * v_alpha(k).real();
      }
    }
  } else {
    lp.rows = 2 * nkept + 1;
    lp.cols = kK * na;
    lp.a.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0.0);
    lp.b.assign(static_cast<std::size_t>(lp.rows), 0.0);
    lp.c.assign(static_cast<std::size_t>(lp.cols), 0.0);
    lp.b[static_cast<std::size_t>(2 * nkept)] = 1.0;
    for (int k = 0; k < na; ++k) {
      for (int h = 0; h < kK; ++h) {
        const Complex rot = std::polar(1.0, -2.0 * std::numbers::pi * h / kK);
        const int col = kK * k + h;
        for (int j = 0; j < nkept; ++j) {
          const Complex rb = rot * thin_q(k, kept[static_cast<std::size_t>(j)]);
          lp.at(j, col) = rb.real();           // d/d Re(c_j)
          lp.at(nkept + j, col) = -rb.imag();  // d/d Im(c_j)
        }
        lp.at(2 * nkept, col) = 1.0;
        lp.c[static_cast<std::size_t>(col)] = (rot * v_alpha(k)).real();
      }
    }
  }

  const LpSolution lps = solve_equality_lp(lp);
  if (lps.status == LpSolution::Status::infeasible)
    throw numeric_error("solve_minimax: dual reported infeasible (internal error)");
  res.lp_iterations = lps.iterations;

  // Weighted q values for a coefficient vector in the orthonormal basis.
  auto values_of = [&](const Eigen::VectorXcd& ctilde) {
    Eigen::VectorXcd vals = v_alpha;
    for (int j = 0; j < nkept; ++j) vals += ctilde(j) * thin_q.col(kept[static_cast<std::size_t>(j)]);
    return vals;
  };
  auto objective_of = [&](const Eigen::VectorXcd& vals) {
    double value = 0.0;
    for (int k = 0; k < na; ++k) value = std::max(value, std::abs(vals(k)));
    return value;
  };

  // Recovery 1: equality multipliers.
  Eigen::VectorXcd c_pi(nkept);
  for (int j = 0; j < nkept; ++j) {
    const double re = -lps.row_multipliers[static_cast<std::size_t>(j)];
    const double im = real_path ? 0.0 : -lps.row_multipliers[static_cast<std::size_t>(nkept + j)];
    c_pi(j) = Complex(re, im);
  }

  // Recovery 2: least-squares re-solve of the tight constraints carrying
  // dual weight (the equioscillation system).
  Eigen::VectorXcd c_ls;
  {
    std::vector<int> support;
    for (int j = 0; j < lp.cols; ++j) {
      if (lps.y[static_cast<std::size_t>(j)] > 1e-14) support.push_back(j);
    }
    if (!support.empty()) {
      const int unknowns = n_real_coeffs + 1;
      Eigen::MatrixXd a(static_cast<Eigen::Index>(support.size()), unknowns);
      Eigen::VectorXd b(static_cast<Eigen::Index>(support.size()));
      for (std::size_t row = 0; row < support.size(); ++row) {
        const int col = support[row];
        if (real_path) {
          const int k = col / 2;
          const double sign = col % 2 == 0 ? 1.0 : -1.0;
          for (int j = 0; j < nkept; ++j)
            a(static_cast<Eigen::Index>(row), j) = sign * thin_q(k, kept[static_cast<std::size_t>(j)]).real();
          a(static_cast<Eigen::Index>(row), nkept) = -1.0;
          b(static_cast<Eigen::Index>(row)) = -sign * v_alpha(k).real();
        } else {
          const int k = col / kK;
          const int h = col % kK;
          const Complex rot = std::polar(1.0, -2.0 * std::numbers::pi * h / kK);
          for (int j = 0; j < nkept; ++j) {
            const Complex rb = rot * thin_q(k, kept[static_cast<std::size_t>(j)]);
            a(static_cast<Eigen::Index>(row), j) = rb.real();
            a(static_cast<Eigen::Index>(row), nkept + j) = -rb.imag();
          }
          a(static_cast<Eigen::Index>(row), 2 * nkept) = -1.0;
          b(static_cast<Eigen::Index>(row)) = -(rot * v_alpha(k)).real();
        }
      }
      Eigen::VectorXd x = Eigen::HouseholderQR<Eigen::MatrixXd>(a).solve(b);
      c_ls.resize(nkept);
      for (int j = 0; j < nkept; ++j) {
        const double re = x(j);
        const double im = real_path ? 0.0 : x(nkept + j);
        c_ls(j) = Complex(re, im);
      }
    }
  }

  const Eigen::VectorXcd vals_pi = values_of(c_pi);
  const double obj_pi = objective_of(vals_pi);
  Eigen::VectorXcd ctilde = c_pi;
  Eigen::VectorXcd qval = vals_pi;
  double value = obj_pi;
  if (c_ls.size() == nkept) {
    const Eigen::VectorXcd vals_ls = values_of(c_ls);
    const double obj_ls = objective_of(vals_ls);
    if (obj_ls <= obj_pi) {
      ctilde = c_ls;
      qval = vals_ls;
      value = obj_ls;
    }
  }

  res.minimax_value = value;
  res.dth_root = std::pow(value, 1.0 / d);
  res.certificate_factor = real_path ? 1.0 : 1.0 / std::cos(std::numbers::pi / kK);

  // Monomial coefficients via the triangular factor (dropped columns get 0).
  {
    Eigen::VectorXcd emb = Eigen::VectorXcd::Zero(nq);
    for (int j = 0; j < nkept; ++j) emb(kept[static_cast<std::size_t>(j)]) = ctilde(j);
    std::vector<bool> is_kept(static_cast<std::size_t>(nq), false);
    for (int j : kept) is_kept[static_cast<std::size_t>(j)] = true;
    Eigen::VectorXcd cm = Eigen::VectorXcd::Zero(nb);
    for (int j = nq - 1; j >= 0; --j) {
      if (!is_kept[static_cast<std::size_t>(j)]) continue;
      Complex s = emb(j);
      for (int k = j + 1; k < nq; ++k) s -= r_full(j, k) * cm(k);
      cm(j) = s / r_full(j, j);
    }
    res.coefficients.resize(res.basis.size());
    for (int b = 0; b < nb; ++b) res.coefficients[static_cast<std::size_t>(b)] = b < nq ? cm(b) : Complex(0.0, 0.0);
  }

  // Complementary slackness: dual weight resting on a slack constraint.
  const double u = lps.objective;
  double cs = 0.0;
  for (int k = 0; k < na; ++k) {
    if (real_path) {
      for (int s = 0; s < 2; ++s) {
        const double y = lps.y[static_cast<std::size_t>(2 * k + s)];
        if (y <= 0.0) continue;
        const double sign = s == 0 ? 1.0 : -1.0;
        cs = std::max(cs, y * std::abs(u - sign * qval(k).real()));
      }
    } else {
      for (int h = 0; h < kK; ++h) {
        const double y = lps.y[static_cast<std::size_t>(kK * k + h)];
        if (y <= 0.0) continue;
        const Complex rot = std::polar(1.0, -2.0 * std::numbers::pi * h / kK);
        cs = std::max(cs, y * std::abs(u - (rot * qval(k)).real()));
      }
    }
  }
  res.cs_residual = cs / std::max(1.0, std::abs(u));

  if (na < n_real_coeffs + 1 || nkept < nb) {
    res.status = TchebyshevResult::Status::degenerate;
  } else if (lps.status == LpSolution::Status::iteration_limit) {
    res.status = TchebyshevResult::Status::iteration_limit;
  } else {
    res.status = TchebyshevResult::Status::optimal;
  }
  return res;
}

std::vector<TchebyshevResult> tcheby_sequence(const WeightedSampleSet& set,
                                              const Direction& theta,
                                              const std::vector<int>& j_values) {
  if (theta.dim() != set.dim) throw input_error("tcheby_sequence: theta dimension mismatch");
  int prev = 0;
  for (int j : j_values) {
    if (j < 1) throw input_error("tcheby_sequence: j values must be >= 1");
    if (j <= prev) throw input_error("tcheby_sequence: j values must be strictly ascending");
    prev = j;
  }
  std::vector<TchebyshevResult> out;
  out.reserve(j_values.size());
  for (int j : j_values) out.push_back(solve_minimax(set, direction_sequence(theta, j)));
  return out;
}

}  // namespace plurikit
