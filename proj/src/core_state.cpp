#include "quncert/core_state.hpp"

#include <numbers>
#include <stdexcept>

namespace quncert {

namespace {
constexpr double kPi = std::numbers::pi;
}

BlochState::BlochState(double s_, double theta_) : s(s_), theta(theta_) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("Bloch vector length must satisfy 0 <= s <= 1");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite");
  }
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("distribution needs at least two outcomes");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= -kProbTolerance && p <= 1.0 + kProbTolerance)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTolerance) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }
}

StateFamily StateFamily::extreme() {
  return {Family::Extreme, {0.0, 0.5 * kPi, kPi, 1.5 * kPi}};
}

StateFamily StateFamily::intermediate() {
  return {Family::Intermediate, {0.25 * kPi, 0.75 * kPi, 1.25 * kPi, 1.75 * kPi}};
}

Family classify_state(double theta, double tol) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite");
  }
  // remainder lands in [-pi/4, pi/4]: 0 marks an extreme state, +-pi/4 an
  // intermediate one.
  const double r = std::remainder(theta, 0.5 * kPi);
  if (std::abs(r) <= tol) return Family::Extreme;
  if (std::abs(std::abs(r) - 0.25 * kPi) <= tol) return Family::Intermediate;
  return Family::Generic;
}

Distribution intrinsic_statistics(const BlochState& state, Observable obs) {
  const double sk = obs == Observable::X ? state.sx() : state.sz();
  return Distribution({0.5 * (1.0 + sk), 0.5 * (1.0 - sk)});
}

Distribution intrinsic_product(const BlochState& state) {
  const Distribution px = intrinsic_statistics(state, Observable::X);
  const Distribution pz = intrinsic_statistics(state, Observable::Z);
  return Distribution({px[0] * pz[0], px[0] * pz[1], px[1] * pz[0], px[1] * pz[1]});
}

}  // namespace quncert
