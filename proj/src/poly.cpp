#include "plurikit/poly.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "plurikit/errors.hpp"

namespace plurikit {

namespace {

Complex power(Complex z, int k) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

Complex eval_terms(const std::map<MultiIndex, Complex, LexLess>& terms, int dim,
                   std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != dim)
    throw input_error("eval: point dimension mismatch");
  Complex sum(0.0, 0.0);
  for (const auto& [alpha, c] : terms) {
    Complex mono(1.0, 0.0);
    for (int i = 0; i < dim; ++i) mono *= power(z[static_cast<std::size_t>(i)], alpha.e[static_cast<std::size_t>(i)]);
    sum += c * mono;
  }
  return sum;
}

}  // namespace

int Poly::degree() const {
  int d = 0;
  for (const auto& [alpha, c] : terms) d = std::max(d, alpha.degree());
  return d;
}

void Poly::set(const MultiIndex& alpha, Complex c) {
  if (alpha.dim() != dim) throw input_error("Poly::set: multi-index dimension mismatch");
  if (c == Complex(0.0, 0.0)) {
    terms.erase(alpha);
  } else {
    terms[alpha] = c;
  }
}

Complex Poly::coeff(const MultiIndex& alpha) const {
  auto it = terms.find(alpha);
  return it == terms.end() ? Complex(0.0, 0.0) : it->second;
}

bool Poly::real_coefficients(double tol) const {
  for (const auto& [alpha, c] : terms) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

Complex eval_poly(const Poly& p, std::span<const Complex> z) {
  return eval_terms(p.terms, p.dim, z);
}

Complex eval_homogeneous(const HomogeneousPoly& p, std::span<const Complex> tz) {
  return eval_terms(p.terms, p.dim, tz);
}

HomogeneousPoly homogenize(const Poly& g, int d) {
  if (g.degree() > d)
    throw input_error("homogenize: polynomial degree exceeds target degree");
  HomogeneousPoly out;
  out.dim = g.dim + 1;
  out.degree = d;
  for (const auto& [beta, c] : g.terms) {
    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(out.dim));
    exps.push_back(d - beta.degree());
    exps.insert(exps.end(), beta.e.begin(), beta.e.end());
    out.terms.emplace(MultiIndex(std::move(exps)), c);
  }
  return out;
}

Poly dehomogenize(const HomogeneousPoly& p) {
  Poly out(p.dim - 1);
  for (const auto& [alpha, c] : p.terms) {
    std::vector<int> exps(alpha.e.begin() + 1, alpha.e.end());
    out.set(MultiIndex(std::move(exps)), c);
  }
  return out;
}

std::string poly_to_json(const Poly& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["terms"] = nlohmann::json::array();
  for (const auto& [alpha, c] : p.terms) {
    nlohmann::json t;
    t["alpha"] = alpha.e;
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(t);
  }
  return j.dump();
}

Poly poly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("poly_from_json: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("terms"))
    throw input_error("poly_from_json: missing dim/terms");
  Poly p(j["dim"].get<int>());
  if (p.dim < 1) throw input_error("poly_from_json: dim must be >= 1");
  for (const auto& t : j["terms"]) {
    MultiIndex alpha(t["alpha"].get<std::vector<int>>());
    if (alpha.dim() != p.dim) throw input_error("poly_from_json: term dimension mismatch");
    p.set(alpha, Complex(t["re"].get<double>(), t["im"].get<double>()));
  }
  return p;
}

}  // namespace plurikit
