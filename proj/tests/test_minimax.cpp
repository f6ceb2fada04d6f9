#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "plurikit/errors.hpp"
#include "plurikit/minimax.hpp"
#include "plurikit/orthopoly.hpp"
#include "plurikit/sample_set.hpp"

using namespace plurikit;

namespace {
WeightedSampleSet interval_grid(int n, const WeightFn& w) {
  return build_grid_set(IntervalDomain{-1.0, 1.0}, {n}, w);
}
WeightFn unit() {
  return [](const PointC&) { return 1.0; };
}
}  // namespace

TEST_CASE("two symmetric points force the odd minimizer") {
  const auto e = WeightedSampleSet::create(1, {{Complex(-1, 0)}, {Complex(1, 0)}}, {1.0, 1.0});
  const auto r = solve_minimax(e, MultiIndex{1});
  CHECK(r.minimax_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.coefficients[0]) <= 1e-12);  // q = x
  CHECK(r.status == TchebyshevResult::Status::optimal);
  CHECK(r.certificate_factor == 1.0);
}

TEST_CASE("Chebyshev oracle on the 2001-point grid") {
  // Oracle: the monic Chebyshev polynomial has sup norm 2^{1-n}; on the grid
  // the discrete optimum can only fall below it by the sampling gap.
  const auto e = interval_grid(2001, unit());
  for (int n : {3, 8, 16}) {
    const auto r = solve_minimax(e, MultiIndex{std::vector<int>{n}});
    CHECK(std::abs(r.minimax_value - oracles::chebyshev_monic_sup(n)) <= 1e-3);
    CHECK(r.minimax_value <= oracles::chebyshev_monic_sup(n) * (1.0 + 1e-9));
    CHECK(r.cs_residual <= 1e-8);
    CHECK(r.status == TchebyshevResult::Status::optimal);
  }
}

TEST_CASE("grid minimax never exceeds the sampled Chebyshev candidate") {
  // Evaluating the closed-form monic Chebyshev on the same grid gives a
  // feasible candidate, so the LP value is bounded by its grid max.
  const auto e = interval_grid(501, unit());
  for (int n : {4, 9}) {
    double cand = 0.0;
    for (const auto& p : e.points)
      cand = std::max(cand, std::abs(oracles::chebyshev_monic_value(n, p[0].real())));
    const auto r = solve_minimax(e, MultiIndex{std::vector<int>{n}});
    CHECK(r.minimax_value <= cand * (1.0 + 1e-9));
  }
}

TEST_CASE("unit circle: monic monomials are optimal") {
  const auto e = build_grid_set(CircleDomain{}, {128}, unit());
  for (int n : {1, 3, 7}) {
    const auto r = solve_minimax(e, MultiIndex{std::vector<int>{n}});
    // Complex path reports within the polygonization certificate of 1.
    CHECK(r.minimax_value >= 1.0 - 1e-9);
    CHECK(r.minimax_value <= r.certificate_factor * (1.0 + 1e-9));
    CHECK(r.certificate_factor == doctest::Approx(1.0 / std::cos(std::numbers::pi / 32)));
  }
}

TEST_CASE("single-point sets are degenerate with value 0") {
  const auto e = WeightedSampleSet::create(1, {{Complex(0.7, 0)}}, {3.0});
  const auto r = solve_minimax(e, MultiIndex{4});
  CHECK(r.status == TchebyshevResult::Status::degenerate);
  CHECK(r.minimax_value <= 1e-12);
  CHECK(r.dth_root <= 1e-3);
}

TEST_CASE("alpha validation") {
  const auto e = interval_grid(11, unit());
  CHECK_THROWS_AS(solve_minimax(e, MultiIndex{0}), input_error);
  CHECK_THROWS_AS(solve_minimax(e, MultiIndex{1, 1}), input_error);
}

TEST_CASE("weight monotonicity of minimax values (exact)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int npts = 20 + static_cast<int>(u(rng) * 30);
    std::vector<double> w_lo, w_hi;
    const auto base = interval_grid(npts, unit());
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double lo = 0.3 + u(rng);
      w_lo.push_back(lo);
      w_hi.push_back(lo * (1.1 + u(rng)));
    }
    const auto e_lo = base.with_weights(w_lo);
    const auto e_hi = base.with_weights(w_hi);
    const MultiIndex alpha{std::vector<int>{2 + trial % 3}};
    const auto r_lo = solve_minimax(e_lo, alpha);
    const auto r_hi = solve_minimax(e_hi, alpha);
    CHECK(r_hi.minimax_value >= r_lo.minimax_value);
  }
}

TEST_CASE("power-of-two weight scaling is bitwise exact") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.3, 1.7);
  for (int trial = 0; trial < 8; ++trial) {
    const int npts = 25 + trial;
    const auto base = interval_grid(npts, unit());
    std::vector<double> w, w2;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double v = u(rng);
      w.push_back(v);
      w2.push_back(2.0 * v);
    }
    const MultiIndex alpha{std::vector<int>{3}};
    const auto r = solve_minimax(base.with_weights(w), alpha);
    const auto r2 = solve_minimax(base.with_weights(w2), alpha);
    CHECK(r2.minimax_value == std::ldexp(r.minimax_value, 3));
  }
}

TEST_CASE("grid refinement never decreases the minimax value") {
  // Exactness is asserted as a chain: the refined value is a max over a
  // superset of identically-computed per-point values of the refined
  // optimizer (bitwise), and that candidate scored on the coarse subset
  // cannot beat the coarse optimum (the added points bind, so the gap is
  // far above solver noise).
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int coarse_n = 15 + trial;
    const auto coarse = interval_grid(coarse_n, unit());
    std::vector<PointC> pts = coarse.points;
    std::vector<double> ws = coarse.weights;
    for (int k = 0; k < 6; ++k) {
      pts.push_back({Complex(1.05 + 0.04 * k + 0.01 * u(rng), 0)});
      ws.push_back(1.0);
    }
    const auto fine = WeightedSampleSet::create(1, pts, ws);
    const MultiIndex alpha{std::vector<int>{3 + trial % 2}};
    const auto rc = solve_minimax(coarse, alpha);
    const auto rf = solve_minimax(fine, alpha);

    // One evaluation pass of the refined optimizer over the fine points:
    // the max over all of them dominates the max over the coarse subset
    // bitwise (max over a superset of identical per-point values).
    const Poly qf = rf.polynomial();
    std::vector<double> vals(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i)
      vals[i] = std::abs(eval_poly(qf, fine.points[i]));
    double max_all = 0.0, max_coarse = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) max_all = std::max(max_all, vals[i]);
    for (std::size_t i = 0; i < coarse.size(); ++i) max_coarse = std::max(max_coarse, vals[i]);
    CHECK(max_all >= max_coarse);  // bitwise superset max
    CHECK(max_coarse >= rc.minimax_value * (1.0 - 1e-12));  // coarse optimality
    CHECK(max_all == doctest::Approx(rf.minimax_value).epsilon(1e-9));
    CHECK(rf.minimax_value >= rc.minimax_value);  // binding points give O(1) margin
  }
}

TEST_CASE("minimax is a lower bound for the L2-optimal monic sup norm") {
  const auto e = interval_grid(401, unit());
  const auto mu = uniform_measure(e);
  for (int n : {4, 8, 16}) {
    const MultiIndex alpha{std::vector<int>{n}};
    const auto r = solve_minimax(e, alpha);
    const double sup_q = l2_optimal_sup_norm(e, mu, n, alpha);
    CHECK(r.minimax_value <= sup_q * (1.0 + 1e-12));
  }
}

TEST_CASE("tcheby_sequence approaches the classical Chebyshev constant 1/2") {
  const auto e = interval_grid(2001, unit());
  const auto seq = tcheby_sequence(e, Direction::create({1.0}), {8, 16, 32});
  REQUIRE(seq.size() == 3);
  double prev = 1.0;
  for (const auto& r : seq) {
    CHECK(std::abs(r.dth_root - 0.5) <= 0.015 * 5);  // within 3% at j = 32; looser early
    CHECK(r.dth_root < prev);
    prev = r.dth_root;
  }
  CHECK(std::abs(seq.back().dth_root - 0.5) <= 0.015);

  CHECK_THROWS_AS(tcheby_sequence(e, Direction::create({1.0}), {8, 8}), input_error);
}

TEST_CASE("2D minimax matches the tensor Chebyshev bound") {
  // On a grid of [-1,1]^2 with alpha = (n, n), the product of monic
  // Chebyshev polynomials is feasible, so value <= 2^{1-n} * 2^{1-n}.
  const auto e = build_grid_set(BoxDomain{{{-1, 1}, {-1, 1}}}, {41, 41}, unit());
  const auto r = solve_minimax(e, MultiIndex{2, 2});
  CHECK(r.minimax_value <= oracles::chebyshev_monic_sup(2) * oracles::chebyshev_monic_sup(2) *
                               (1.0 + 1e-9));
  CHECK(r.minimax_value > 0.0);
}
