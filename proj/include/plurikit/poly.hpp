#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>

#include "plurikit/multi_index.hpp"

namespace plurikit {

using Complex = std::complex<double>;

/// Sparse polynomial over multi-indices. Zero coefficients are never stored.
struct Poly {
  int dim = 0;
  std::map<MultiIndex, Complex, LexLess> terms;

  Poly() = default;
  explicit Poly(int dim) : dim(dim) {}

  int degree() const;  // max term degree; 0 for the empty polynomial
  void set(const MultiIndex& alpha, Complex c);
  Complex coeff(const MultiIndex& alpha) const;
  bool real_coefficients(double tol = 0.0) const;
};

/// Polynomial whose terms all share one total degree.
struct HomogeneousPoly {
  int dim = 0;
  int degree = 0;
  std::map<MultiIndex, Complex, LexLess> terms;
};

/// Sum of c_beta z^beta with powers by repeated multiplication and
/// deterministic lex-order summation.
Complex eval_poly(const Poly& p, std::span<const Complex> z);
Complex eval_homogeneous(const HomogeneousPoly& p, std::span<const Complex> tz);

/// c_beta z^beta  ->  c_beta t^{d-|beta|} z^beta, t the new first variable.
/// Requires deg G <= d.
HomogeneousPoly homogenize(const Poly& g, int d);

/// Substitute t = 1 (drop the first variable).
Poly dehomogenize(const HomogeneousPoly& p);

/// JSON wire format: {"dim": N, "terms": [{"alpha": [...], "re": r, "im": s}, ...]}
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

}  // namespace plurikit
