#pragma once

#include "hawkes/params.hpp"

namespace hawkes::analytics {

// E[f+_t] = E[f-_t]: expected cumulated upward price moves at time t.
double mean_price_component(const HawkesParams& params, double t);

// E[λ+_t] = E[λ-_t]; equals d/dt mean_price_component / E(J).
double mean_intensity(const HawkesParams& params, double t);

// E[f_t^2], including the f0^2 offset.
double second_moment(const HawkesParams& params, double t);

// d/ds E[f_s^2], differentiated analytically term by term.
double second_moment_derivative(const HawkesParams& params, double s);

// d/ds E[f_s^2] - 2 E(J^2) E[λ+_s]: the stationarity defect that drives the
// signature plot away from flat. Assembled from exponential coefficients so
// it vanishes cleanly as alpha -> 0.
double correction_bracket(const HawkesParams& params, double s);

// E[(f_t - f_s)^2] for 0 <= s < t <= T.
double increment_second_moment(const HawkesParams& params, double s, double t);

// C(t, δ): expected realized variance at sampling step δ. The grid sum over
// ⌊t/δ⌋ windows collapses to geometric series, so the cost is O(1) in δ.
double signature_plot_theoretical(const HawkesParams& params, double t, double delta);

// δ -> 0 limit of C(t, δ).
double signature_plot_micro(const HawkesParams& params, double t);

// δ -> ∞ limit of C(t, δ) (with δ/t -> 0).
double signature_plot_macro(const HawkesParams& params, double t);

// Signature plot of the stationary constant-baseline regime.
double signature_plot_stationary(const HawkesParams& params, double delta);

// (σ_macro)^2(v) for v in [0, 1]: instantaneous variance of the Brownian
// limit in macroscopic time; strictly increasing in v (Samuelson effect).
double macro_volatility(const HawkesParams& params, double v);

// ⌊x⌋ with a 1e-12 relative snap toward the nearest integer, so a grid step
// that divides the horizon up to representation error keeps its last window.
long floor_with_snap(double x);

}  // namespace hawkes::analytics
