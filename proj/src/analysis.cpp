#include "quncert/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quncert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

double target_entropy(ScanTarget target, double theta, const MeasurementSetup& setup,
                      const EntropyMeasure& m) {
  const BlochState state(1.0, theta);
  switch (target) {
    case ScanTarget::Joint:
      return m(joint_statistics(state, setup).flat());
    case ScanTarget::ProductOperational:
      return m(operational_product(state, setup).flat());
    case ScanTarget::ProductIntrinsic:
      return m(intrinsic_product(state).probs());
  }
  throw std::invalid_argument("unknown scan target");
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) {
    throw std::invalid_argument("grid needs at least two points");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + step * i;
  }
  grid.back() = hi;
  return grid;
}

std::vector<CurvePoint> entropy_curve(const ScanConfig& config) {
  if (config.theta_steps < 2) {
    throw std::invalid_argument("theta_steps must be at least 2");
  }
  if (!(config.theta_min >= 0.0 && config.theta_min < config.theta_max &&
        config.theta_max <= 2.0 * kPi)) {
    throw std::invalid_argument("theta range must be increasing and within [0, 2 pi]");
  }
  const EntropyMeasure measure{config.family, config.q};
  const MeasurementSetup setup(config.delta);
  const std::vector<double> grid = linspace(config.theta_min, config.theta_max, config.theta_steps);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double theta : grid) {
    values.push_back(target_entropy(config.target, theta, setup, measure));
  }
  if (config.normalize) {
    values = normalize_curve(values).values;
  }
  std::vector<CurvePoint> curve;
  curve.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    curve.push_back({grid[i], values[i]});
  }
  return curve;
}

CompetitionResult competition(double q, double delta, EntropyFamily family, ScanTarget target) {
  const EntropyMeasure measure{family, q};
  const MeasurementSetup setup(delta);
  const double intermediate = target_entropy(target, 0.25 * kPi, setup, measure);
  const double extreme = target_entropy(target, 0.0, setup, measure);
  const double delta_t = intermediate - extreme;
  Winner winner = Winner::Tie;
  if (delta_t > kTieTolerance) {
    winner = Winner::ExtremeMin;
  } else if (delta_t < -kTieTolerance) {
    winner = Winner::IntermediateMin;
  }
  return {q, delta_t, winner};
}

RootResult critical_q(double delta, EntropyFamily family, ScanTarget target, double q_lo,
                      double q_hi) {
  if (!(q_lo > 0.0)) {
    throw std::invalid_argument("bracket must lie in q > 0");
  }
  return bisect_root(
      [delta, family, target](double q) { return competition(q, delta, family, target).delta_t; },
      q_lo, q_hi, 1e-10, 200);
}

double entropy_difference(const BlochState& state, const MeasurementSetup& setup,
                          EntropyFamily family, double q) {
  const EntropyMeasure measure{family, q};
  return measure(operational_product(state, setup).flat()) -
         measure(joint_statistics(state, setup).flat());
}

RootResult difference_critical_q(double delta, EntropyFamily family) {
  const BlochState intermediate(1.0, 0.25 * kPi);
  const MeasurementSetup setup(delta);
  const auto diff = [&](double q) { return entropy_difference(intermediate, setup, family, q); };
  // Coarse scan for the first sign change, then bisect inside it.
  const double q_lo = 1.05;
  const double q_hi = 4.0;
  const int scan_steps = 60;
  double prev_q = q_lo;
  double prev_v = diff(q_lo);
  for (int i = 1; i <= scan_steps; ++i) {
    const double q = q_lo + (q_hi - q_lo) * i / scan_steps;
    const double v = diff(q);
    if (prev_v == 0.0) return {prev_q, 0, 0.0, q_lo, q_hi};
    if ((prev_v < 0.0) != (v < 0.0)) {
      return bisect_root(diff, prev_q, q, 1e-10, 200);
    }
    prev_q = q;
    prev_v = v;
  }
  throw std::domain_error("entropy difference does not change sign over q in (1.05, 4)");
}

std::vector<CurvePoint> fisher_curve(double q, const std::vector<double>& theta_grid) {
  std::vector<CurvePoint> curve;
  curve.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    curve.push_back({theta, generalized_fisher(theta, q)});
  }
  return curve;
}

double refine_extremum(const std::vector<CurvePoint>& curve, std::size_t index) {
  if (index >= curve.size()) {
    throw std::invalid_argument("extremum index out of range");
  }
  if (index == 0 || index + 1 == curve.size()) return curve[index].theta;
  const double x1 = curve[index].theta;
  const double y0 = curve[index - 1].value;
  const double y1 = curve[index].value;
  const double y2 = curve[index + 1].value;
  const double denom = y0 - 2.0 * y1 + y2;
  if (std::abs(denom) < 1e-300) return x1;
  const double h = 0.5 * (curve[index + 1].theta - curve[index - 1].theta);
  const double vertex = x1 + 0.5 * h * (y0 - y2) / denom;
  // A sane fit stays inside the bracketing points.
  return std::clamp(vertex, curve[index - 1].theta, curve[index + 1].theta);
}

}  // namespace quncert
