#pragma once

#include <cstddef>

namespace hawkes::kernels {

enum class Backend { scalar, avx2 };

// Backend in use for the dispatched entry points below. Resolved once per
// process: HAWKES_SIMD=scalar|avx2|auto if set, otherwise the best backend
// the CPU supports.
Backend active_backend();
const char* backend_name(Backend backend);
bool backend_available(Backend backend);

// Re-resolves dispatch (tests use this to compare backends in-process).
// Throws hawkes::Error if the requested backend is unavailable.
void set_backend(Backend backend);

// Σ x[i]
double sum(const double* x, std::size_t n);

// Σ x[i]^2
double sum_sq(const double* x, std::size_t n);

// Σ_{i=0}^{n_increments-1} (x[(i+1)*stride] - x[i*stride])^2.
// Caller guarantees n_increments * stride is a valid index.
double sum_sq_diff_strided(const double* x, std::size_t n_increments, std::size_t stride);

// Σ_j w[j] * exp(-beta * (t - times[j])), with times[j] <= t.
double exp_decay_sum(const double* times, const double* weights, std::size_t n, double t,
                     double beta);

// Σ_j K((center - times[j]) / h) with K(u) = 0.75 (1 - u^2) on |u| <= 1,
// zero outside. The 1/h kernel normalization is left to the caller.
double epanechnikov_sum(const double* times, std::size_t n, double center, double h);

// Scalar reference implementations, exposed so tests can compare the
// dispatched path against them regardless of the active backend.
namespace scalar {
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_sq_diff_strided(const double* x, std::size_t n_increments, std::size_t stride);
double exp_decay_sum(const double* times, const double* weights, std::size_t n, double t,
                     double beta);
double epanechnikov_sum(const double* times, std::size_t n, double center, double h);
}  // namespace scalar

}  // namespace hawkes::kernels
