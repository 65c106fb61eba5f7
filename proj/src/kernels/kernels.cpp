#include "hawkes/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "hawkes/errors.hpp"

#if defined(HAWKES_HAVE_AVX2_BACKEND)
namespace hawkes::kernels::avx2 {
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_sq_diff_strided(const double* x, std::size_t n_increments, std::size_t stride);
double exp_decay_sum(const double* times, const double* weights, std::size_t n, double t,
                     double beta);
double epanechnikov_sum(const double* times, std::size_t n, double center, double h);
}  // namespace hawkes::kernels::avx2
#endif

namespace hawkes::kernels {

namespace {

struct Vtable {
  double (*sum)(const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  double (*sum_sq_diff_strided)(const double*, std::size_t, std::size_t);
  double (*exp_decay_sum)(const double*, const double*, std::size_t, double, double);
  double (*epanechnikov_sum)(const double*, std::size_t, double, double);
};

constexpr Vtable kScalar{scalar::sum, scalar::sum_sq, scalar::sum_sq_diff_strided,
                         scalar::exp_decay_sum, scalar::epanechnikov_sum};

#if defined(HAWKES_HAVE_AVX2_BACKEND)
constexpr Vtable kAvx2{avx2::sum, avx2::sum_sq, avx2::sum_sq_diff_strided, avx2::exp_decay_sum,
                       avx2::epanechnikov_sum};
#endif

struct Dispatch {
  const Vtable* table = &kScalar;
  Backend backend = Backend::scalar;
};

Dispatch g_dispatch;
std::once_flag g_init_once;

bool cpu_has_avx2() {
#if defined(HAWKES_HAVE_AVX2_BACKEND)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void apply_backend(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      g_dispatch = {&kScalar, Backend::scalar};
      return;
    case Backend::avx2:
#if defined(HAWKES_HAVE_AVX2_BACKEND)
      g_dispatch = {&kAvx2, Backend::avx2};
      return;
#else
      break;
#endif
  }
  throw Error("SIMD backend unavailable on this build/CPU: " +
              std::string(backend_name(backend)));
}

void init_from_env() {
  const char* env = std::getenv("HAWKES_SIMD");
  if (env != nullptr && std::strcmp(env, "auto") != 0 && *env != '\0') {
    if (std::strcmp(env, "scalar") == 0) {
      apply_backend(Backend::scalar);
      return;
    }
    if (std::strcmp(env, "avx2") == 0) {
      apply_backend(Backend::avx2);
      return;
    }
    throw Error("unknown HAWKES_SIMD value (expected scalar, avx2 or auto): " +
                std::string(env));
  }
  apply_backend(cpu_has_avx2() ? Backend::avx2 : Backend::scalar);
}

const Vtable& table() {
  std::call_once(g_init_once, init_from_env);
  return *g_dispatch.table;
}

}  // namespace

Backend active_backend() {
  std::call_once(g_init_once, init_from_env);
  return g_dispatch.backend;
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

bool backend_available(Backend backend) {
  return backend == Backend::scalar || (backend == Backend::avx2 && cpu_has_avx2());
}

void set_backend(Backend backend) {
  std::call_once(g_init_once, init_from_env);
  apply_backend(backend);
}

double sum(const double* x, std::size_t n) { return table().sum(x, n); }

double sum_sq(const double* x, std::size_t n) { return table().sum_sq(x, n); }

double sum_sq_diff_strided(const double* x, std::size_t n_increments, std::size_t stride) {
  return table().sum_sq_diff_strided(x, n_increments, stride);
}

double exp_decay_sum(const double* times, const double* weights, std::size_t n, double t,
                     double beta) {
  return table().exp_decay_sum(times, weights, n, t, beta);
}

double epanechnikov_sum(const double* times, std::size_t n, double center, double h) {
  return table().epanechnikov_sum(times, n, center, h);
}

}  // namespace hawkes::kernels
