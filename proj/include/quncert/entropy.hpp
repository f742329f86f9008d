#pragma once

#include <span>
#include <vector>

#include "quncert/core_state.hpp"
#include "quncert/measurement.hpp"

namespace quncert {

enum class EntropyFamily { Tsallis, Renyi };

// Orders this close to 1 dispatch to the Shannon limit; the 1/(1-q)
// forms lose precision inside this window.
inline constexpr double kShannonWindow = 1e-9;

/// Shannon entropy -sum p ln p, with the 0 ln 0 = 0 convention.
double shannon(std::span<const double> probs);

/// Tsallis entropy T_q = (sum p^q - 1)/(1 - q), q > 0. Orders within
/// kShannonWindow of 1 return the Shannon value.
double tsallis(std::span<const double> probs, double q);
double tsallis(const Distribution& dist, double q);
double tsallis(const JointDistribution& dist, double q);

/// Renyi entropy R_q = ln(sum p^q)/(1 - q), q > 0; Shannon at q = 1.
double renyi(std::span<const double> probs, double q);
double renyi(const Distribution& dist, double q);
double renyi(const JointDistribution& dist, double q);

/// Entropy family tagged with its order.
struct EntropyMeasure {
  EntropyFamily family;
  double q;

  double operator()(std::span<const double> probs) const;
};

/// Combine component Tsallis entropies into the entropy of their product
/// distribution: tx + tz + (1-q) tx tz. Plain additivity at q = 1.
double tsallis_pseudo_additive(double tx, double tz, double q);

struct NormalizedCurve {
  std::vector<double> values;
  bool constant;  // max - min below 1e-14; values are all zeros
};

/// Affine rescaling of a curve to [0, 1], preserving argmin/argmax.
NormalizedCurve normalize_curve(std::span<const double> values);

/// Tsallis or Renyi mutual information of a joint distribution,
/// built from the bracket sum p(x,z)^q / (p(x) p(z))^(q-1) with marginals
/// computed internally. Shannon mutual information at q = 1. Terms with
/// p(x,z) = 0 contribute 0.
double mutual_information(const JointDistribution& joint, EntropyFamily family, double q);

/// Two-outcome probe for signals generated by sigma_y and read out in the
/// sigma_z basis: p+(eta) = cos^2(eta - theta), p-(eta) = sin^2(eta - theta).
/// Log-derivatives are taken at eta = 0.
struct FisherProbe {
  double theta;

  double prob_plus(double eta) const {
    const double c = std::cos(eta - theta);
    return c * c;
  }
  double prob_minus(double eta) const {
    const double s = std::sin(eta - theta);
    return s * s;
  }
  double log_derivative_plus() const { return 2.0 * std::tan(theta); }
  double log_derivative_minus() const { return -2.0 / std::tan(theta); }
};

/// Generalized Fisher information [sum p |d ln p / d eta|^(1/q)]^q of the
/// probe at eta = 0. For q = 1/2 the sum is the standard Fisher
/// information, identically 4 for every theta, and is returned directly.
/// Points where a probe probability vanishes (theta a multiple of pi/2)
/// are a domain error for q != 1/2; at q = 1/2 the finite limit 4 applies.
double generalized_fisher(double theta, double q);

}  // namespace quncert
