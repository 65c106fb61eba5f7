#include <cmath>

#include "hawkes/kernels.hpp"

namespace hawkes::kernels::scalar {

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_sq_diff_strided(const double* x, std::size_t n_increments, std::size_t stride) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n_increments; ++i) {
    const double d = x[(i + 1) * stride] - x[i * stride];
    acc += d * d;
  }
  return acc;
}

double exp_decay_sum(const double* times, const double* weights, std::size_t n, double t,
                     double beta) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += weights[i] * std::exp(-beta * (t - times[i]));
  return acc;
}

double epanechnikov_sum(const double* times, std::size_t n, double center, double h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (center - times[i]) / h;
    const double w = 1.0 - u * u;
    if (w > 0.0) acc += 0.75 * w;
  }
  return acc;
}

}  // namespace hawkes::kernels::scalar
