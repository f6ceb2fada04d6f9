#pragma once

#include <cstdint>
#include <vector>

#include "plurikit/circular.hpp"
#include "plurikit/measure.hpp"
#include "plurikit/poly.hpp"
#include "plurikit/sample_set.hpp"

namespace plurikit {

enum class BMFamily { orthonormal, tchebyshev, random_monic };

const char* to_string(BMFamily f);

/// d-th-root trace of sup/L2 norm ratios over a polynomial family. The
/// weighted Bernstein-Markov property manifests as dth_roots -> 1; no
/// boolean verdict is ever produced (the constant C(eps) is not knowable
/// from finite data).
struct BMTrace {
  std::vector<int> degrees;
  std::vector<double> ratios;
  std::vector<double> dth_roots;
  BMFamily family = BMFamily::orthonormal;
};

BMTrace bm_trace(const WeightedSampleSet& set, const DiscreteMeasure& mu,
                 const std::vector<int>& d_list, BMFamily family, std::uint64_t seed = 1);

struct SplitCheckReport {
  int degree = 0;
  double pythagoras_residual = 0.0;   // squared-norm decomposition across degrees
  double lift_l2_max_residual = 0.0;  // per-part lift/base L2 identity
};

/// Checks (a) ||p||^2_{L2(nu)} = sum_i ||p_i||^2_{L2(nu)} over the
/// homogeneous parts and (b) ||P_d||_{L2(nu)} = ||w^d G_d||_{L2(mu)} for
/// each part. Requires m > 2 deg p (the discrete circle kills cross terms
/// exactly only then).
SplitCheckReport homogeneous_split_check(const CircularSample& z, const DiscreteMeasure& nu,
                                         const Poly& p, int m);

struct WeierstrassResult {
  Poly h;         // truncated exponential of the log-weight fit
  Poly g;         // least-squares fit of log w
  double band_lo = 1.0, band_hi = 1.0;  // exact min/max of w / |H| on the samples
  int g_degree = 0;
  int exp_terms = 0;  // K in H = sum_{k<=K} g^k / k!
};

/// Polynomial surrogate H with certified sandwich
/// 1 - 2 eps <= w/H <= 1 + 2 eps on the samples.
WeierstrassResult weierstrass_surrogate(const WeightedSampleSet& set, double eps);

}  // namespace plurikit
