#include "quncert/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quncert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double grid_sum(const std::array<double, 4>& v) { return v[0] + v[1] + v[2] + v[3]; }

}  // namespace

MeasurementSetup::MeasurementSetup(double delta_) : delta(delta_) {
  if (!(delta >= 0.0 && delta <= kHalfPi)) {
    throw std::invalid_argument("overlap angle delta must lie in [0, pi/2]");
  }
}

JointDistribution::JointDistribution(std::array<double, 4> probs) : probs_(probs) {
  for (double p : probs_) {
    if (!(p >= -kProbTolerance)) {
      throw std::invalid_argument("joint probability is negative");
    }
  }
  if (std::abs(grid_sum(probs_) - 1.0) > kProbTolerance) {
    throw std::invalid_argument("joint probabilities do not sum to 1");
  }
}

Distribution JointDistribution::marginal(Observable obs) const {
  if (obs == Observable::X) {
    return Distribution({probs_[0] + probs_[1], probs_[2] + probs_[3]});
  }
  return Distribution({probs_[0] + probs_[2], probs_[1] + probs_[3]});
}

QuasiDistribution::QuasiDistribution(std::array<double, 4> values) : values_(values) {
  if (std::abs(grid_sum(values_) - 1.0) > kProbTolerance) {
    throw std::invalid_argument("quasi-distribution entries do not sum to 1");
  }
}

double QuasiDistribution::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

Distribution QuasiDistribution::marginal(Observable obs) const {
  if (obs == Observable::X) {
    return Distribution({values_[0] + values_[1], values_[2] + values_[3]});
  }
  return Distribution({values_[0] + values_[2], values_[1] + values_[3]});
}

JointDistribution joint_statistics(const BlochState& state, const MeasurementSetup& setup) {
  const double sx = state.sx();
  const double sz = state.sz();
  const double sd = std::sin(setup.delta);
  const double cd = std::cos(setup.delta);
  std::array<double, 4> probs{};
  for (int x : {1, -1}) {
    for (int z : {1, -1}) {
      probs[outcome_pair_index(x, z)] = 0.25 * (1.0 + z * sz * sd + x * sx * cd);
    }
  }
  return JointDistribution(probs);
}

Distribution marginal_statistics(const BlochState& state, const MeasurementSetup& setup,
                                 Observable obs) {
  const double sk = obs == Observable::X ? state.sx() * std::cos(setup.delta)
                                         : state.sz() * std::sin(setup.delta);
  return Distribution({0.5 * (1.0 + sk), 0.5 * (1.0 - sk)});
}

JointDistribution operational_product(const BlochState& state, const MeasurementSetup& setup) {
  const Distribution px = marginal_statistics(state, setup, Observable::X);
  const Distribution pz = marginal_statistics(state, setup, Observable::Z);
  return JointDistribution({px[0] * pz[0], px[0] * pz[1], px[1] * pz[0], px[1] * pz[1]});
}

CorrelationDefect correlation_defect(const BlochState& state, const MeasurementSetup& setup) {
  const double coeff =
      -state.s * state.s * std::sin(2.0 * state.theta) * std::sin(2.0 * setup.delta) / 16.0;
  return CorrelationDefect{coeff};
}

JointDistribution simulate_coupling(const BlochState& state, const MeasurementSetup& setup) {
  if (std::abs(state.s - 1.0) > 1e-12) {
    throw std::invalid_argument("coupling simulation requires a pure state (s = 1)");
  }
  if (setup.delta <= 0.0) {
    throw std::domain_error(
        "apparatus projection basis is singular at delta = 0 (1/cos(phi) diverges)");
  }
  const double half_theta = 0.5 * state.theta;
  const double cs = std::cos(half_theta);
  const double sn = std::sin(half_theta);

  // Apparatus states with <a+|a-> = cos(delta), real amplitudes.
  const std::array<double, 2> a_plus{std::cos(0.5 * setup.delta), std::sin(0.5 * setup.delta)};
  const std::array<double, 2> a_minus{std::cos(0.5 * setup.delta), -std::sin(0.5 * setup.delta)};

  // Composite amplitudes in the basis |+>|e1>, |+>|e2>, |->|e1>, |->|e2>.
  const std::array<double, 4> psi{cs * a_plus[0], cs * a_plus[1], sn * a_minus[0],
                                  sn * a_minus[1]};

  // Minimum-noise apparatus projection basis.
  const double phi = setup.phi();
  const double norm = 1.0 / std::cos(phi);
  const double cp = std::cos(0.5 * phi);
  const double sp = std::sin(0.5 * phi);
  const std::array<double, 2> b_plus{norm * (cp * a_plus[0] - sp * a_minus[0]),
                                     norm * (cp * a_plus[1] - sp * a_minus[1])};
  const std::array<double, 2> b_minus{norm * (-sp * a_plus[0] + cp * a_minus[0]),
                                      norm * (-sp * a_plus[1] + cp * a_minus[1])};

  // sigma_x eigenvectors in the sigma_z eigenbasis.
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const std::array<double, 2> x_plus{inv_sqrt2, inv_sqrt2};
  const std::array<double, 2> x_minus{inv_sqrt2, -inv_sqrt2};

  std::array<double, 4> probs{};
  for (int x : {1, -1}) {
    const auto& xv = x == 1 ? x_plus : x_minus;
    for (int z : {1, -1}) {
      const auto& bv = z == 1 ? b_plus : b_minus;
      double amp = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          amp += xv[i] * bv[j] * psi[2 * i + j];
        }
      }
      probs[outcome_pair_index(x, z)] = amp * amp;
    }
  }
  return JointDistribution(probs);
}

double apparatus_cost(double varphi, double delta) {
  const double s = std::sin(varphi);
  const double c = std::cos(varphi + delta);
  const double base = s * s + c * c;
  return base * base;
}

double optimize_apparatus(double delta) {
  const MeasurementSetup validated(delta);
  delta = validated.delta;
  const double lo = 0.0;
  const double hi = kHalfPi;
  const auto cost = [delta](double v) { return apparatus_cost(v, delta); };

  // The cost is constant at delta = 0; every varphi is then optimal and the
  // interval midpoint is returned.
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = -cmin;
  for (int i = 0; i <= 32; ++i) {
    const double c = cost(lo + (hi - lo) * i / 32.0);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  if (cmax - cmin < 1e-13) {
    return 0.5 * (lo + hi);
  }

  // Golden-section bracketing; bisection on the analytic slope of the cost
  // base afterwards, since function values alone cannot pin the minimizer
  // past the sqrt(eps) limit.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = cost(x1);
  double f2 = cost(x2);
  while (b - a > 1e-3) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = cost(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = cost(x2);
    }
  }

  const auto slope = [delta](double v) { return std::sin(2.0 * v) - std::sin(2.0 * (v + delta)); };
  double sa = slope(a);
  double sb = slope(b);
  if (sa >= 0.0 && sb >= 0.0) return a;  // minimum pinned at the left edge
  if (sa <= 0.0 && sb <= 0.0) return b;
  while (b - a > 1e-12) {
    const double mid = 0.5 * (a + b);
    const double sm = slope(mid);
    if (sm == 0.0) return mid;
    if ((sm < 0.0) == (sa < 0.0)) {
      a = mid;
      sa = sm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

NoiseMatrix noise_matrix(Observable obs, double delta) {
  const MeasurementSetup validated(delta);
  const double phi =
      obs == Observable::X ? 0.5 * validated.delta : 0.25 * kPi - 0.5 * validated.delta;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double c2 = c * c;
  const double s2 = s * s;
  return NoiseMatrix{phi, {c2, s2, s2, c2}};
}

Distribution NoiseMatrix::apply(const Distribution& p) const {
  if (p.size() != 2) {
    throw std::invalid_argument("noise matrix acts on two-outcome distributions");
  }
  return Distribution({m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]});
}

bool NoiseMatrix::invertible(double tol) const { return std::abs(m[0] - m[1]) > tol; }

std::array<double, 4> NoiseMatrix::inverse() const {
  const double det = m[0] * m[3] - m[1] * m[2];  // cos(2 phi)
  if (std::abs(det) < 1e-12) {
    throw std::domain_error("noise matrix is singular (phi = pi/4)");
  }
  return {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
}

QuasiDistribution infer_true_joint(const BlochState& state) {
  const double sx = state.sx();
  const double sz = state.sz();
  std::array<double, 4> values{};
  for (int x : {1, -1}) {
    for (int z : {1, -1}) {
      values[outcome_pair_index(x, z)] = 0.25 * (1.0 + z * sz + x * sx);
    }
  }
  return QuasiDistribution(values);
}

QuasiDistribution invert_joint_statistics(const JointDistribution& observed,
                                          const MeasurementSetup& setup) {
  const auto mx_inv = noise_matrix(Observable::X, setup.delta).inverse();
  const auto mz_inv = noise_matrix(Observable::Z, setup.delta).inverse();
  // Rows indexed by x, columns by z: p = Mx^{-1} ptilde Mz^{-t}.
  const auto obs = observed.flat();
  std::array<double, 4> values{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          acc += mx_inv[2 * i + k] * obs[2 * k + l] * mz_inv[2 * j + l];
        }
      }
      values[2 * i + j] = acc;
    }
  }
  return QuasiDistribution(values);
}

bool is_nonclassical(const BlochState& state) {
  return infer_true_joint(state).min_value() < -1e-12;
}

}  // namespace quncert
