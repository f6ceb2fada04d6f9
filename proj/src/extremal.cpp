#include "plurikit/extremal.hpp"

#include <cmath>
#include <limits>

#include "plurikit/errors.hpp"

namespace plurikit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double member_value(const GreenMember& m, bool homogeneous, std::span<const Complex> z) {
  const double av = homogeneous ? std::abs(eval_homogeneous(m.ph, z))
                                : std::abs(eval_poly(m.p, z));
  if (av == 0.0) return kNegInf;
  return (std::log(av) - std::log(m.normalizer)) / m.d;
}

}  // namespace

double GreenApprox::value(std::span<const Complex> z) const {
  return value_with_argmax(z).first;
}

std::pair<double, int> GreenApprox::value_with_argmax(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim)
    throw input_error("GreenApprox: evaluation point dimension mismatch");
  double best = kNegInf;
  int arg = 0;
  const bool hom = kind == Kind::homogeneous;
  for (const GreenMember& m : family) {
    const double v = member_value(m, hom, z);
    if (v > best) {
      best = v;
      arg = m.d;
    }
  }
  return {best, arg};
}

double GreenApprox::value_vz(std::span<const Complex> z) const {
  return std::max(0.0, value(z));
}

GreenApprox green_weighted(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                           int d_max) {
  if (d_max < 1) throw input_error("green_weighted: d_max must be >= 1");
  bool unit = true;
  for (double w : set.weights) {
    if (w != 1.0) {
      unit = false;
      break;
    }
  }

  GreenApprox g;
  g.kind = unit ? GreenApprox::Kind::unweighted : GreenApprox::Kind::weighted;
  g.dim = set.dim;
  g.source = "E: " + std::to_string(set.size()) + " samples, d_max " + std::to_string(d_max);
  for (int d = 1; d <= d_max; ++d) {
    const OrthoResult r = orthonormalize(set, mu, d);
    for (const MultiIndex& alpha : r.basis_order) {
      GreenMember m;
      m.d = d;
      m.p = orthonormal_polynomial(r, alpha);
      m.normalizer = weighted_sup_norm(set, m.p, d);
      // Unit L2 norm forces |p| > 0 somewhere on {w > 0}.
      if (!(m.normalizer > 0.0))
        throw numeric_error("green_weighted: vanishing normalizer (degenerate family)");
      g.family.push_back(std::move(m));
    }
  }
  return g;
}

GreenApprox green_homogeneous(const CircularSample& z, const DiscreteMeasure& base_mu,
                              int d_max) {
  if (z.samples.empty()) throw input_error("green_homogeneous: empty lift");
  const GreenApprox gw = green_weighted(z.base, base_mu, d_max);

  GreenApprox g;
  g.kind = GreenApprox::Kind::homogeneous;
  g.dim = z.base.dim + 1;
  g.source = gw.source + ", lifted (m = " + std::to_string(z.circle_points) + ")";
  g.family.reserve(gw.family.size());
  for (const GreenMember& m : gw.family) {
    GreenMember h;
    h.d = m.d;
    h.ph = homogenize(m.p, m.d);
    double nrm = 0.0;
    for (const PointC& s : z.samples) nrm = std::max(nrm, std::abs(eval_homogeneous(h.ph, s)));
    if (!(nrm > 0.0))
      throw numeric_error("green_homogeneous: vanishing normalizer on the lift");
    h.normalizer = nrm;
    g.family.push_back(std::move(h));
  }
  return g;
}

GreenApprox green_homogeneous(const CircularSample& z, int d_max) {
  return green_homogeneous(z, uniform_measure(z.base), d_max);
}

RobinTrace robin_estimate(const GreenApprox& g, std::span<const Complex> z,
                          const std::vector<double>& s_list) {
  if (s_list.empty()) throw input_error("robin_estimate: empty s list");
  double prev = 0.0;
  for (double s : s_list) {
    if (!(s > prev)) throw input_error("robin_estimate: s values must be ascending and positive");
    prev = s;
  }
  if (s_list.back() < 1e3)
    throw input_error("robin_estimate: largest s must be >= 1e3");

  RobinTrace out;
  PointC scaled(z.begin(), z.end());
  for (double s : s_list) {
    for (std::size_t j = 0; j < scaled.size(); ++j) scaled[j] = s * z[j];
    const double v = g.kind == GreenApprox::Kind::homogeneous ? g.value_vz(scaled)
                                                              : g.value(scaled);
    out.trace.emplace_back(s, v - std::log(s));
  }
  out.estimate = out.trace.back().second;
  return out;
}

MonotonicityReport weight_monotonicity_check(const WeightedSampleSet& set,
                                             const DiscreteMeasure& mu,
                                             const std::vector<double>& w_hi,
                                             const std::vector<double>& w_lo, int d_max,
                                             const std::vector<PointC>& probe_points) {
  if (w_hi.size() != set.size() || w_lo.size() != set.size())
    throw input_error("weight_monotonicity_check: weight vector length mismatch");
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!(w_hi[i] >= w_lo[i]))
      throw input_error("weight_monotonicity_check: requires w_hi >= w_lo pointwise");
  }

  // Shared family from the w_lo problem; only the normalizers differ.
  const WeightedSampleSet lo = set.with_weights(w_lo);
  struct Member {
    Poly p;
    int d;
    double nrm_hi, nrm_lo;
  };
  std::vector<Member> family;
  for (int d = 1; d <= d_max; ++d) {
    const OrthoResult r = orthonormalize(lo, mu, d);
    for (const MultiIndex& alpha : r.basis_order) {
      Member m;
      m.d = d;
      m.p = orthonormal_polynomial(r, alpha);
      double nh = 0.0, nl = 0.0;
      for (std::size_t i = 0; i < set.size(); ++i) {
        const double av = std::abs(eval_poly(m.p, set.points[i]));  // shared between weights
        double ph = 1.0, pl = 1.0;
        for (int k = 0; k < d; ++k) {
          ph *= w_hi[i];
          pl *= w_lo[i];
        }
        nh = std::max(nh, ph * av);
        nl = std::max(nl, pl * av);
      }
      m.nrm_hi = nh;
      m.nrm_lo = nl;
      family.push_back(std::move(m));
    }
  }

  MonotonicityReport rep;
  for (const PointC& z : probe_points) {
    double vh = kNegInf, vl = kNegInf;
    for (const Member& m : family) {
      const double av = std::abs(eval_poly(m.p, z));
      if (av == 0.0) continue;
      const double la = std::log(av);
      vh = std::max(vh, (la - std::log(m.nrm_hi)) / m.d);
      vl = std::max(vl, (la - std::log(m.nrm_lo)) / m.d);
    }
    rep.v_hi.push_back(vh);
    rep.v_lo.push_back(vl);
    if (vh > vl) {
      rep.ok = false;
      rep.max_violation = std::max(rep.max_violation, vh - vl);
    }
  }
  return rep;
}

}  // namespace plurikit
