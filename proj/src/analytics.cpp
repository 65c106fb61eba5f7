#include "hawkes/analytics.hpp"

#include <cmath>

#include "hawkes/errors.hpp"

namespace hawkes::analytics {

namespace {

// Shorthands shared by every closed form below (all rates per hour):
//   a  = αE(J)   excitation mass          k  = κ/T   baseline growth
//   gm = β - a   slow mean-reversion      gp = β + a fast mean-reversion
struct Coeffs {
  double a, k, gm, gp;
  double c1, c2, c3, c4;  // second-moment constants
  double mean_a;          // (β+k)/(k(gm+k)), e^{kt} weight of E[f+]
  double mean_b;          // a/(gm(gm+k)), e^{-gm t} weight of E[f+]
  double lam_rel;         // a/(gm+k), relative excitation part of E[λ+]
  // correction_bracket(s) / (2 μ0 E(J^2)) as exponential coefficients
  double b_k, b_gm, b_2gp, b_gp;
};

Coeffs coeffs(const HawkesParams& p) {
  Coeffs c{};
  c.a = p.excitation_mass();
  c.k = p.growth_rate();
  c.gm = p.beta - c.a;
  c.gp = p.beta + c.a;
  const double b = p.beta;

  c.c1 = -(c.a * c.a) / (c.gm * (b + 3.0 * c.a) * (c.gm + c.k));
  c.c2 = c.a * c.a * (b + 2.0 * c.a) / (c.gp * c.gp * (b + 3.0 * c.a) * (2.0 * c.gp + c.k));
  c.c3 = c.a * b / (c.gp * c.gp * (c.gp + c.k));
  c.c4 = b * b * b / (c.k * c.gp * c.gp * c.gm);

  c.mean_a = (b + c.k) / (c.k * (c.gm + c.k));
  c.mean_b = c.a / (c.gm * (c.gm + c.k));
  c.lam_rel = c.a / (c.gm + c.k);

  const double csum = c.c1 + c.c2 + c.c3 + c.c4;
  c.b_k = c.k * csum - (b + c.k) / (c.gm + c.k);
  c.b_gm = c.gm * c.c1 + c.lam_rel;
  c.b_2gp = 2.0 * c.gp * c.c2;
  c.b_gp = c.gp * c.c3;
  return c;
}

void check_time(const HawkesParams& p, double t, const char* what) {
  if (!(t >= 0.0) || t > p.T) {
    throw TimeOutOfRange(std::string(what) + " must lie in [0, T]");
  }
}

double second_moment_excess(const HawkesParams& p, const Coeffs& c, double t) {
  // E[f_t^2] - f0^2, grouped so each term vanishes exactly at t = 0.
  const double ekt = std::exp(c.k * t);
  return 2.0 * p.mu0 * p.mean_j2 *
         (c.c1 * (ekt - std::exp(-c.gm * t)) + c.c2 * (ekt - std::exp(-2.0 * c.gp * t)) +
          c.c3 * (ekt - std::exp(-c.gp * t)) + c.c4 * std::expm1(c.k * t));
}

double bracket_value(const HawkesParams& p, const Coeffs& c, double s) {
  return 2.0 * p.mu0 * p.mean_j2 *
         (c.b_k * std::exp(c.k * s) + c.b_gm * std::exp(-c.gm * s) +
          c.b_2gp * std::exp(-2.0 * c.gp * s) + c.b_gp * std::exp(-c.gp * s));
}

// (1 - e^{-gp Δ}) / gp
double relaxation_weight(double gp, double dt) { return -std::expm1(-gp * dt) / gp; }

// Σ_{i=0}^{n-1} e^{c i δ}
double geometric_sum(double rate, double delta, long n) {
  const double x = rate * delta;
  if (std::abs(x) < 1e-14) return static_cast<double>(n);
  return std::expm1(static_cast<double>(n) * x) / std::expm1(x);
}

}  // namespace

long floor_with_snap(double x) {
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-12 * std::fmax(1.0, std::abs(x))) {
    return static_cast<long>(nearest);
  }
  return static_cast<long>(std::floor(x));
}

double mean_price_component(const HawkesParams& params, double t) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  const Coeffs c = coeffs(p);
  return p.mu0 * p.mean_j * (c.mean_a * std::expm1(c.k * t) - c.mean_b * (-std::expm1(-c.gm * t)));
}

double mean_intensity(const HawkesParams& params, double t) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  const Coeffs c = coeffs(p);
  const double ekt = std::exp(c.k * t);
  return p.mu0 * (ekt + c.lam_rel * (ekt - std::exp(-c.gm * t)));
}

double second_moment(const HawkesParams& params, double t) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  return p.f0 * p.f0 + second_moment_excess(p, coeffs(p), t);
}

double second_moment_derivative(const HawkesParams& params, double s) {
  const HawkesParams p = validate(params);
  check_time(p, s, "s");
  const Coeffs c = coeffs(p);
  const double eks = std::exp(c.k * s);
  return 2.0 * p.mu0 * p.mean_j2 *
         (c.c1 * (c.k * eks + c.gm * std::exp(-c.gm * s)) +
          c.c2 * (c.k * eks + 2.0 * c.gp * std::exp(-2.0 * c.gp * s)) +
          c.c3 * (c.k * eks + c.gp * std::exp(-c.gp * s)) + c.c4 * c.k * eks);
}

double correction_bracket(const HawkesParams& params, double s) {
  const HawkesParams p = validate(params);
  check_time(p, s, "s");
  return bracket_value(p, coeffs(p), s);
}

double increment_second_moment(const HawkesParams& params, double s, double t) {
  const HawkesParams p = validate(params);
  check_time(p, s, "s");
  check_time(p, t, "t");
  if (!(s < t)) throw TimeOrderViolation("increment requires s < t");
  const Coeffs c = coeffs(p);
  return second_moment_excess(p, c, t) - second_moment_excess(p, c, s) -
         relaxation_weight(c.gp, t - s) * bracket_value(p, c, s);
}

double signature_plot_theoretical(const HawkesParams& params, double t, double delta) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  if (!(delta > 0.0) || delta > t) throw BadWindow("delta must lie in (0, t]");
  const Coeffs c = coeffs(p);
  const long n = floor_with_snap(t / delta);
  const double grid_sum =
      2.0 * p.mu0 * p.mean_j2 *
      (c.b_k * geometric_sum(c.k, delta, n) + c.b_gm * geometric_sum(-c.gm, delta, n) +
       c.b_2gp * geometric_sum(-2.0 * c.gp, delta, n) + c.b_gp * geometric_sum(-c.gp, delta, n));
  return (second_moment_excess(p, c, static_cast<double>(n) * delta) -
          relaxation_weight(c.gp, delta) * grid_sum) /
         t;
}

double signature_plot_micro(const HawkesParams& params, double t) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  if (!(t > 0.0)) throw TimeOutOfRange("t must be > 0");
  // 2 E(J^2) E(∫_0^t λ+)/t with E(∫ λ+) = E(f+_t)/E(J).
  const Coeffs c = coeffs(p);
  return 2.0 * p.mean_j2 * p.mu0 *
         (c.mean_a * std::expm1(c.k * t) - c.mean_b * (-std::expm1(-c.gm * t))) / t;
}

double signature_plot_macro(const HawkesParams& params, double t) {
  const HawkesParams p = validate(params);
  check_time(p, t, "t");
  if (!(t > 0.0)) throw TimeOutOfRange("t must be > 0");
  const double r = branching_ratio(p);
  const double k = p.growth_rate();
  const double mean_baseline = p.mu0 * std::expm1(k * t) / (k * t);  // (1/t)∫ μ(s/T) ds
  return 2.0 * p.mean_j2 / ((1.0 + r) * (1.0 + r) * (1.0 - r)) * mean_baseline;
}

double signature_plot_stationary(const HawkesParams& params, double delta) {
  const HawkesParams p = validate(params);
  if (!(delta > 0.0)) throw BadWindow("delta must be > 0");
  const double r = branching_ratio(p);
  const double gp = p.beta + p.excitation_mass();
  const double plateau = 1.0 / ((1.0 + r) * (1.0 + r));
  const double blend = -std::expm1(-gp * delta) / (gp * delta);
  return 2.0 * p.mu0 * p.mean_j2 / (1.0 - r) * (plateau + (1.0 - plateau) * blend);
}

double macro_volatility(const HawkesParams& params, double v) {
  const HawkesParams p = validate(params);
  if (!(v >= 0.0) || v > 1.0) throw TimeOutOfRange("v must lie in [0, 1]");
  const double r = branching_ratio(p);
  return 2.0 * p.mean_j2 * p.mu0 * std::exp(p.kappa * v) / ((1.0 + r) * (1.0 + r) * (1.0 - r));
}

}  // namespace hawkes::analytics
