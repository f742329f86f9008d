#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace quncert {

// Tolerance for probability validation (entry bounds and normalization).
inline constexpr double kProbTolerance = 1e-12;

enum class Observable { X, Z };

/// Qubit state confined to the xz plane of the Bloch sphere,
/// parametrized by the vector length s and the polar angle theta.
struct BlochState {
  double s;      // Bloch vector length, 0 <= s <= 1
  double theta;  // polar angle in the xz plane, radians

  BlochState(double s_, double theta_);

  double sx() const { return s * std::sin(theta); }
  double sz() const { return s * std::cos(theta); }
};

/// Validated probability vector. Two-outcome distributions are ordered
/// (+1, -1); four-outcome products are row-major over (x, z).
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

enum class Family { Extreme, Intermediate, Generic };

/// One of the two state families competing for minimum uncertainty:
/// extreme states sit at theta = m*pi/2, intermediate ones at odd
/// multiples of pi/4.
struct StateFamily {
  Family kind;
  std::vector<double> representative_thetas;

  static StateFamily extreme();
  static StateFamily intermediate();
};

/// Classify theta against the two families, modulo pi/2.
Family classify_state(double theta, double tol = 1e-9);

/// Exact single-observable statistics p(k) = (1 + k*s_k)/2, ordered (+1, -1).
Distribution intrinsic_statistics(const BlochState& state, Observable obs);

/// Four-outcome product p_x * p_z, row-major over (x, z).
Distribution intrinsic_product(const BlochState& state);

}  // namespace quncert
