#pragma once

#include <vector>

#include "quncert/entropy.hpp"
#include "quncert/rootfind.hpp"

namespace quncert {

enum class ScanTarget { Joint, ProductOperational, ProductIntrinsic };

/// Recipe for a theta scan of one entropy over the pure-state family s = 1.
struct ScanConfig {
  double theta_min = 0.0;
  double theta_max = 0.5 * std::numbers::pi;
  int theta_steps = 1000;
  double delta = 0.25 * std::numbers::pi;
  double q = 0.5;
  EntropyFamily family = EntropyFamily::Tsallis;
  ScanTarget target = ScanTarget::Joint;
  bool normalize = false;
};

struct CurvePoint {
  double theta;
  double value;
};

/// Inclusive evenly spaced grid with n >= 2 points.
std::vector<double> linspace(double lo, double hi, int n);

/// Entropy of the selected target statistics across the theta grid,
/// optionally rescaled to [0, 1].
std::vector<CurvePoint> entropy_curve(const ScanConfig& config);

enum class Winner { ExtremeMin, IntermediateMin, Tie };

/// Sign-carrying competition value: entropy at the intermediate state
/// (theta = pi/4) minus entropy at the extreme state (theta = 0).
/// Positive means the extreme states carry minimum uncertainty.
struct CompetitionResult {
  double q;
  double delta_t;
  Winner winner;
};

CompetitionResult competition(double q, double delta, EntropyFamily family, ScanTarget target);

/// Bisection root of the competition value as a function of q.
RootResult critical_q(double delta, EntropyFamily family, ScanTarget target, double q_lo,
                      double q_hi);

/// Entropy of the product of operational marginals minus entropy of the
/// joint statistics. Vanishes identically when sin(2 theta) sin(2 delta) = 0.
double entropy_difference(const BlochState& state, const MeasurementSetup& setup,
                          EntropyFamily family, double q);

/// Root in q of entropy_difference at the intermediate state theta = pi/4;
/// locates a sign change by coarse scan of (1.05, 4) before bisecting.
RootResult difference_critical_q(double delta, EntropyFamily family);

/// Generalized Fisher information over an explicit theta grid.
std::vector<CurvePoint> fisher_curve(double q, const std::vector<double>& theta_grid);

/// Three-point parabolic refinement of a grid extremum at the given index;
/// falls back to the grid abscissa at the boundary or for a degenerate fit.
double refine_extremum(const std::vector<CurvePoint>& curve, std::size_t index);

}  // namespace quncert
