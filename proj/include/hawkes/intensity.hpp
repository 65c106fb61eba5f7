#pragma once

#include "hawkes/params.hpp"
#include "hawkes/types.hpp"

namespace hawkes {

// Markov state of the exponential kernel: the decayed mark sums
//   s_plus  = Σ_{τ+ <= t} J+ exp(-β (t - τ+))   (feeds λ-),
//   s_minus = Σ_{τ- <= t} J- exp(-β (t - τ-))   (feeds λ+).
// Baseline μ(t/T) is evaluated lazily from t, never stored, so advancing
// the clock cannot drift it.
struct IntensityState {
  double t = 0.0;
  double s_plus = 0.0;
  double s_minus = 0.0;
};

// Decays both sums by exp(-β dt), moves the clock, then applies the new
// event's mark if one is given (the event is taken to occur at t + dt; only
// its sign and mark are read). Throws NegativeTimeStep for dt < 0.
IntensityState advance_state(const IntensityState& state, double beta, double dt,
                             const MarkedEvent* new_event = nullptr);

struct IntensityPair {
  double lam_plus = 0.0;
  double lam_minus = 0.0;
  double total() const { return lam_plus + lam_minus; }
};

// λ+ = μ(t/T) + α s_minus, λ- = μ(t/T) + α s_plus (null-diagonal kernel).
IntensityPair intensities_at(const HawkesParams& params, const IntensityState& state);

}  // namespace hawkes
