#pragma once

#include <array>
#include <numbers>
#include <span>
#include <stdexcept>

#include "quncert/core_state.hpp"

namespace quncert {

/// Simultaneous unsharp measurement of sigma_x and sigma_z. The overlap
/// angle delta fixes the apparatus states via cos(delta) = <a+|a->;
/// sigma_x is read out exactly at delta = 0, sigma_z at delta = pi/2,
/// and delta = pi/4 balances the added noise between the two.
struct MeasurementSetup {
  double delta;  // apparatus overlap angle, 0 <= delta <= pi/2

  explicit MeasurementSetup(double delta_);

  // Rotation parameter of the apparatus projection basis.
  double phi() const { return 0.5 * std::numbers::pi - delta; }
};

/// Flat index into a 2x2 outcome grid stored row-major as
/// (+,+), (+,-), (-,+), (-,-).
inline std::size_t outcome_pair_index(int x, int z) {
  if ((x != 1 && x != -1) || (z != 1 && z != -1)) {
    throw std::invalid_argument("outcome labels must be +1 or -1");
  }
  return (x == 1 ? 0u : 2u) + (z == 1 ? 0u : 1u);
}

/// Nonnegative joint distribution over the four (x, z) outcomes.
class JointDistribution {
 public:
  explicit JointDistribution(std::array<double, 4> probs);

  double at(int x, int z) const { return probs_[outcome_pair_index(x, z)]; }
  std::span<const double> flat() const { return probs_; }
  Distribution marginal(Observable obs) const;

 private:
  std::array<double, 4> probs_;
};

/// Normalized 2x2 grid whose entries may be negative. This is the object
/// recovered by undoing the measurement noise; negative entries flag
/// nonclassical states.
class QuasiDistribution {
 public:
  explicit QuasiDistribution(std::array<double, 4> values);

  double at(int x, int z) const { return values_[outcome_pair_index(x, z)]; }
  std::span<const double> flat() const { return values_; }
  double min_value() const;
  Distribution marginal(Observable obs) const;

 private:
  std::array<double, 4> values_;
};

/// Column-stochastic 2x2 noise map relating intrinsic to operational
/// single-observable statistics, [[cos^2 phi, sin^2 phi], [sin^2 phi,
/// cos^2 phi]]. Singular exactly at phi = pi/4.
struct NoiseMatrix {
  double phi;
  std::array<double, 4> m;  // row-major

  Distribution apply(const Distribution& p) const;
  bool invertible(double tol = 1e-12) const;
  std::array<double, 4> inverse() const;  // throws std::domain_error if singular
};

/// Joint statistics p(x,z) = (1 + z*s_z*sin(delta) + x*s_x*cos(delta))/4.
JointDistribution joint_statistics(const BlochState& state, const MeasurementSetup& setup);

/// Operational marginals, p(x) = (1 + x*s_x*cos(delta))/2 and
/// p(z) = (1 + z*s_z*sin(delta))/2.
Distribution marginal_statistics(const BlochState& state, const MeasurementSetup& setup,
                                 Observable obs);

/// Product of the two operational marginals as a 2x2 grid.
JointDistribution operational_product(const BlochState& state, const MeasurementSetup& setup);

/// Closed form for joint minus product of marginals:
/// defect(x,z) = -(1/16) x z s^2 sin(2 theta) sin(2 delta).
struct CorrelationDefect {
  double coefficient;
  double operator()(int x, int z) const {
    outcome_pair_index(x, z);  // validate labels
    return coefficient * x * z;
  }
};

CorrelationDefect correlation_defect(const BlochState& state, const MeasurementSetup& setup);

/// Hilbert-space oracle for joint_statistics. Builds the composite
/// system-apparatus amplitudes with a concrete apparatus basis
/// |a(+/-)> = (cos(delta/2), +/- sin(delta/2)), projects onto sigma_x
/// eigenstates tensored with the minimum-noise apparatus basis, and returns
/// Born-rule probabilities. Requires a pure state; rejects delta = 0, where
/// the apparatus projection basis normalization 1/cos(phi) diverges.
JointDistribution simulate_coupling(const BlochState& state, const MeasurementSetup& setup);

/// Distance-to-identity cost of the apparatus readout,
/// [sin^2(varphi) + cos^2(varphi + delta)]^2.
double apparatus_cost(double varphi, double delta);

/// Numerical minimizer of apparatus_cost over varphi in [0, pi/2].
double optimize_apparatus(double delta);

/// Noise map for one observable; phi_x = delta/2, phi_z = pi/4 - delta/2.
NoiseMatrix noise_matrix(Observable obs, double delta);

/// Noise-free joint distribution inferred by undoing the measurement,
/// p(x,z) = (1 + z*s_z + x*s_x)/4. Independent of the unsharpness delta.
QuasiDistribution infer_true_joint(const BlochState& state);

/// Numerical counterpart of infer_true_joint: applies the inverse noise
/// maps to an observed joint distribution. Throws std::domain_error when
/// either noise matrix is singular (delta = 0 or delta = pi/2).
QuasiDistribution invert_joint_statistics(const JointDistribution& observed,
                                          const MeasurementSetup& setup);

/// True iff the inferred joint distribution has a negative entry,
/// equivalently |s_x| + |s_z| > 1.
bool is_nonclassical(const BlochState& state);

}  // namespace quncert
