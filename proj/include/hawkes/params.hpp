#pragma once

#include <array>

#include "hawkes/errors.hpp"

namespace hawkes {

// Model parameters plus the first two jump-size moments. Everything the
// closed forms need lives here; time is measured in hours throughout.
struct HawkesParams {
  double mu0 = 0.0;      // baseline level, events/hour
  double kappa = 0.0;    // baseline growth exponent (dimensionless)
  double alpha = 0.0;    // excitation scale, 1/hour per unit mark
  double beta = 0.0;     // excitation decay, 1/hour
  double T = 0.0;        // session horizon, hours
  double mean_j = 0.0;   // E[J], EUR/MWh
  double mean_j2 = 0.0;  // E[J^2], (EUR/MWh)^2
  double f0 = 0.0;       // initial price, EUR/MWh

  // αE(J): total mean excitation mass per event.
  double excitation_mass() const { return alpha * mean_j; }
  // κ/T: baseline growth rate per hour.
  double growth_rate() const { return kappa / T; }
  // μ(t/T) = μ0 exp(κ t/T)
  double baseline(double t) const;
};

// Returns the parameters unchanged iff they satisfy positivity,
// the stability condition αE(J) < β, and E(J^2) >= E(J)^2.
// Throws NonPositiveParameter or StabilityViolation otherwise.
HawkesParams validate(const HawkesParams& params);

// r = αE(J)/β, in (0,1) for validated parameters.
double branching_ratio(const HawkesParams& params);

// Tiny 2x2 matrix; enough for the branching algebra.
struct Mat2 {
  // row-major: [[a11, a12], [a21, a22]]
  std::array<double, 4> m{};

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }
  Mat2 mul(const Mat2& o) const;
  double row_sum(int i) const { return (*this)(i, 0) + (*this)(i, 1); }
};

// (I2 - K)^{-1} for K = [[0, r], [r, 0]]: (1/(1-r^2)) [[1, r], [r, 1]].
// Entries are assembled from 1/(1-r) and 1/(1+r) so that row sums land on
// 1/(1-r) to the last bit.
Mat2 inverse_branching_matrix(const HawkesParams& params);

}  // namespace hawkes
