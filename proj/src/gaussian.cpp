#include "quncert/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quncert/entropy.hpp"

namespace quncert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid_order(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("entropy order q must be positive");
  }
}

// Per-quadrature width entering the sum: the intrinsic width itself, or the
// noise-broadened sqrt(1 + dk^2) of the operational statistics.
double effective_width(double dk, SumMode mode) {
  return mode == SumMode::Intrinsic ? dk : std::sqrt(1.0 + dk * dk);
}

}  // namespace

GaussianPair::GaussianPair(double dx_) : dx(dx_) {
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::invalid_argument("quadrature width dx must be positive");
  }
}

double gaussian_power_integral(double dk, double q) {
  require_valid_order(q);
  return std::pow(kTwoPi, 0.5 * (1.0 - q)) * std::pow(dk, 1.0 - q) / std::sqrt(q);
}

double gaussian_tsallis_single(double dk, double q) {
  require_valid_order(q);
  if (std::abs(q - 1.0) < kShannonWindow) {
    return 0.5 * std::log(kTwoPi * std::numbers::e * dk * dk);
  }
  return (gaussian_power_integral(dk, q) - 1.0) / (1.0 - q);
}

double gaussian_tsallis_product(const GaussianPair& pair, double q) {
  require_valid_order(q);
  const double product = pair.dx * pair.dy();
  if (std::abs(q - 1.0) < kShannonWindow) {
    return std::log(kTwoPi * std::numbers::e * product);
  }
  return (std::pow(kTwoPi * product, 1.0 - q) / q - 1.0) / (1.0 - q);
}

double gaussian_renyi_product(const GaussianPair& pair, double q) {
  require_valid_order(q);
  const double product = pair.dx * pair.dy();
  if (std::abs(q - 1.0) < kShannonWindow) {
    return std::log(product) + std::log(kTwoPi) + 1.0;
  }
  return std::log(product) + std::log(kTwoPi) - std::log(q) / (1.0 - q);
}

double gaussian_operational_joint_tsallis(const GaussianPair& pair, double q) {
  require_valid_order(q);
  const double dx2 = pair.dx * pair.dx;
  const double dy2 = pair.dy() * pair.dy();
  const double width = kTwoPi * std::sqrt((1.0 + dx2) * (1.0 + dy2));
  if (std::abs(q - 1.0) < kShannonWindow) {
    return std::log(width) + 1.0;
  }
  return (std::pow(width, 1.0 - q) / q - 1.0) / (1.0 - q);
}

double gaussian_entropy_sum(const GaussianPair& pair, double q, SumMode mode) {
  require_valid_order(q);
  const double u = 1.0 - q;
  const double lx = std::log(effective_width(pair.dx, mode));
  const double ly = std::log(effective_width(pair.dy(), mode));
  if (std::abs(u) < kShannonWindow) {
    // q -> 1 limit of the printed form: the bracket is O(u), so only its
    // leading coefficient survives the 1/u prefactor. On the dx*dy = 1
    // family this vanishes in the intrinsic case.
    return lx + ly;
  }
  // expm1 keeps the bracket stable when u*log(width) is tiny.
  const double bracket = std::expm1(u * lx) + std::expm1(u * ly);
  return std::pow(kTwoPi, 0.5 * u) / (std::sqrt(q) * u) * bracket;
}

double gaussian_entropy_sum_from_components(const GaussianPair& pair, double q, SumMode mode) {
  return gaussian_tsallis_single(effective_width(pair.dx, mode), q) +
         gaussian_tsallis_single(effective_width(pair.dy(), mode), q);
}

namespace {

template <typename F>
RootResult critical_q_of(F&& sum) {
  const double h = 1e-4;
  const auto second_diff = [&sum, h](double q) {
    const double f0 = sum(1.0, q);
    const double fp = sum(1.0 + h, q);
    const double fm = sum(1.0 - h, q);
    return (fp - 2.0 * f0 + fm) / (h * h);
  };
  return bisect_root(second_diff, 0.1, 6.0, 1e-6, 200);
}

}  // namespace

RootResult gaussian_critical_q(SumMode mode) {
  return critical_q_of(
      [mode](double dx, double q) { return gaussian_entropy_sum(GaussianPair(dx), q, mode); });
}

RootResult gaussian_critical_q_from_components(SumMode mode) {
  return critical_q_of([mode](double dx, double q) {
    return gaussian_entropy_sum_from_components(GaussianPair(dx), q, mode);
  });
}

}  // namespace quncert
