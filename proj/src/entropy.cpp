#include "quncert/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quncert {

namespace {

void require_positive_order(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("entropy order q must be positive");
  }
}

// sum p^q with the 0^q = 0 convention (entries within tolerance of 0 are
// treated as exact zeros).
double power_sum(std::span<const double> probs, double q) {
  double sum = 0.0;
  for (double p : probs) {
    if (p > 0.0) sum += std::pow(p, q);
  }
  return sum;
}

}  // namespace

double shannon(std::span<const double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p > 0.0) sum -= p * std::log(p);
  }
  return sum;
}

double tsallis(std::span<const double> probs, double q) {
  require_positive_order(q);
  if (std::abs(q - 1.0) < kShannonWindow) return shannon(probs);
  return (power_sum(probs, q) - 1.0) / (1.0 - q);
}

double tsallis(const Distribution& dist, double q) { return tsallis(dist.probs(), q); }
double tsallis(const JointDistribution& dist, double q) { return tsallis(dist.flat(), q); }

double renyi(std::span<const double> probs, double q) {
  require_positive_order(q);
  if (std::abs(q - 1.0) < kShannonWindow) return shannon(probs);
  return std::log(power_sum(probs, q)) / (1.0 - q);
}

double renyi(const Distribution& dist, double q) { return renyi(dist.probs(), q); }
double renyi(const JointDistribution& dist, double q) { return renyi(dist.flat(), q); }

double EntropyMeasure::operator()(std::span<const double> probs) const {
  return family == EntropyFamily::Tsallis ? tsallis(probs, q) : renyi(probs, q);
}

double tsallis_pseudo_additive(double tx, double tz, double q) {
  require_positive_order(q);
  if (std::abs(q - 1.0) < kShannonWindow) return tx + tz;
  return tx + tz + (1.0 - q) * tx * tz;
}

NormalizedCurve normalize_curve(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("normalization needs at least two samples");
  }
  const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
  const double mn = *mn_it;
  const double mx = *mx_it;
  if (mx - mn < 1e-14) {
    return {std::vector<double>(values.size(), 0.0), true};
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - mn) / (mx - mn);
  }
  return {std::move(out), false};
}

double mutual_information(const JointDistribution& joint, EntropyFamily family, double q) {
  require_positive_order(q);
  const Distribution px = joint.marginal(Observable::X);
  const Distribution pz = joint.marginal(Observable::Z);
  const auto p = joint.flat();
  if (std::abs(q - 1.0) < kShannonWindow) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double pij = p[2 * i + j];
        if (pij > 0.0) sum += pij * std::log(pij / (px[i] * pz[j]));
      }
    }
    return sum;
  }
  double bracket = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double pij = p[2 * i + j];
      if (pij > 0.0) bracket += std::pow(pij, q) / std::pow(px[i] * pz[j], q - 1.0);
    }
  }
  if (family == EntropyFamily::Tsallis) return (bracket - 1.0) / (q - 1.0);
  return std::log(bracket) / (q - 1.0);
}

double generalized_fisher(double theta, double q) {
  require_positive_order(q);
  const FisherProbe probe{theta};
  const double pp = probe.prob_plus(0.0);
  const double pm = probe.prob_minus(0.0);
  const bool vanishing = std::min(pp, pm) < 1e-24;
  if (std::abs(q - 0.5) < 1e-12) {
    if (vanishing) return 4.0;  // finite limit of the Fisher information
    const double dp = probe.log_derivative_plus();
    const double dm = probe.log_derivative_minus();
    return pp * dp * dp + pm * dm * dm;
  }
  if (vanishing) {
    throw std::domain_error(
        "generalized Fisher information undefined where a probe probability vanishes (q != 1/2)");
  }
  const double dp = std::abs(probe.log_derivative_plus());
  const double dm = std::abs(probe.log_derivative_minus());
  const double inv_q = 1.0 / q;
  return std::pow(pp * std::pow(dp, inv_q) + pm * std::pow(dm, inv_q), q);
}

}  // namespace quncert
