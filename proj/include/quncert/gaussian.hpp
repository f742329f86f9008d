#pragma once

#include "quncert/rootfind.hpp"

namespace quncert {

/// Minimum-uncertainty Gaussian quadrature pair: standard deviation dx for
/// quadrature X, with dy = 1/dx pinned by the family constraint dx*dy = 1.
/// Both quadratures have zero mean.
struct GaussianPair {
  double dx;

  explicit GaussianPair(double dx_);

  double dy() const { return 1.0 / dx; }
};

enum class SumMode { Intrinsic, Operational };

/// Closed form of the single-Gaussian power integral
/// int p^q dk = (2 pi)^((1-q)/2) dk^(1-q) / sqrt(q).
double gaussian_power_integral(double dk, double q);

/// Continuous Tsallis entropy of a single Gaussian; Shannon at q = 1.
double gaussian_tsallis_single(double dk, double q);

/// Tsallis entropy of the product of intrinsic quadrature statistics,
/// [(2 pi dx dy)^(1-q) / q - 1]/(1-q). Constant on the dx*dy = 1 family.
double gaussian_tsallis_product(const GaussianPair& pair, double q);

/// Renyi entropy of the same product, ln(dx dy) + ln(2 pi) - ln(q)/(1-q).
double gaussian_renyi_product(const GaussianPair& pair, double q);

/// Tsallis entropy of the operational joint distribution, where each
/// quadrature variance picks up one unit of measurement noise:
/// {[2 pi sqrt((1+dx^2)(1+dy^2))]^(1-q) / q - 1}/(1-q).
double gaussian_operational_joint_tsallis(const GaussianPair& pair, double q);

/// Sum of the two single-quadrature Tsallis entropies in the form
/// (2 pi)^((1-q)/2) / (sqrt(q)(1-q)) * [w_x^(1-q) + w_y^(1-q) - 2] with
/// w_k = dk (intrinsic) or sqrt(1 + dk^2) (operational). Note the "-2"
/// sits inside the prefactor here; see gaussian_entropy_sum_from_components
/// for the variant built directly from the power integrals. The two differ
/// by a dx-independent constant only.
double gaussian_entropy_sum(const GaussianPair& pair, double q, SumMode mode);

/// Same quantity assembled as gaussian_tsallis_single(w_x) +
/// gaussian_tsallis_single(w_y).
double gaussian_entropy_sum_from_components(const GaussianPair& pair, double q, SumMode mode);

/// Order q at which dx = 1 flips between local minimum and local maximum of
/// the entropy sum: bisection on a central second difference (step 1e-4)
/// at dx = 1 over q in (0.1, 6). Throws std::domain_error if the curvature
/// does not change sign over that range.
RootResult gaussian_critical_q(SumMode mode);
RootResult gaussian_critical_q_from_components(SumMode mode);

}  // namespace quncert
