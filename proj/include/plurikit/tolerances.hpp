#pragma once

#include <utility>
#include <vector>

namespace plurikit::tol {

// Every guard value here is echoed verbatim into the CLI's JSON run manifest.

/// Relative tolerance when grouping lift samples by their line coordinate.
inline constexpr double kLambdaGroupingRel = 1e-9;

/// Half-plane count approximating |.| <= u in the complex minimax LP.
inline constexpr int kComplexHalfplanes = 32;

/// Triangular-factor diagonal guard: abort when a diagonal falls below
/// this fraction of the largest diagonal.
inline constexpr double kQrDiagGuardRel = 1e-13;

/// Default degree cap for Green-function approximant families.
inline constexpr int kGreenDmaxDefault = 24;

/// Quadrature convergence: doubling node count must change reported
/// leading coefficients by less than this (relative).
inline constexpr double kQuadDoublingRel = 1e-8;

/// Default contact-set threshold on Q - V.
inline constexpr double kContactTolDefault = 0.02;

/// Default truncation tail budget (relative certificate).
inline constexpr double kTailBudgetDefault = 1e-12;

/// Weierstrass surrogate search caps.
inline constexpr int kWeierstrassMaxFitDegree = 50;
inline constexpr int kWeierstrassMaxExpTerms = 60;

/// Robin estimates evaluate at these radial factors and report the trace.
inline constexpr double kRobinScales[3] = {1e3, 1e4, 1e5};

/// Simplex pivot/entering thresholds (relative to equilibrated rows).
inline constexpr double kSimplexPivotTol = 1e-11;
inline constexpr double kSimplexEnterTol = 1e-14;

/// Maximum simplex iterations before status iteration-limit.
inline constexpr int kSimplexMaxIter = 200000;

/// Named export for the manifest.
std::vector<std::pair<const char*, double>> all_guards();

}  // namespace plurikit::tol
