#include <cmath>
#include <string>

#include "hawkes/intensity.hpp"
#include "hawkes/params.hpp"
#include "hawkes/types.hpp"

namespace hawkes {

void check_stream(const EventStream& stream) {
  double prev = 0.0;
  bool first = true;
  for (const MarkedEvent& ev : stream.events) {
    if (!(ev.mark > 0.0)) throw Error("event mark must be > 0");
    if (ev.t < 0.0 || ev.t > stream.horizon) throw Error("event time outside [0, horizon]");
    if (!first && !(ev.t > prev)) throw Error("event times must be strictly increasing");
    prev = ev.t;
    first = false;
  }
}

double HawkesParams::baseline(double t) const { return mu0 * std::exp(kappa * t / T); }

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveParameter(std::string(name) + " must be > 0 and finite");
  }
}

}  // namespace

HawkesParams validate(const HawkesParams& params) {
  require_positive(params.mu0, "mu0");
  require_positive(params.kappa, "kappa");
  require_positive(params.alpha, "alpha");
  require_positive(params.beta, "beta");
  require_positive(params.T, "T");
  require_positive(params.mean_j, "mean_j");
  require_positive(params.mean_j2, "mean_j2");
  if (!std::isfinite(params.f0)) throw NonPositiveParameter("f0 must be finite");
  if (params.mean_j2 < params.mean_j * params.mean_j) {
    throw NonPositiveParameter("mean_j2 must be >= mean_j^2");
  }
  if (!(params.excitation_mass() < params.beta)) {
    throw StabilityViolation("stability requires alpha*mean_j < beta (got " +
                             std::to_string(params.excitation_mass()) +
                             " >= " + std::to_string(params.beta) + ")");
  }
  return params;
}

double branching_ratio(const HawkesParams& params) {
  return params.excitation_mass() / params.beta;
}

Mat2 Mat2::mul(const Mat2& o) const {
  Mat2 out;
  out(0, 0) = (*this)(0, 0) * o(0, 0) + (*this)(0, 1) * o(1, 0);
  out(0, 1) = (*this)(0, 0) * o(0, 1) + (*this)(0, 1) * o(1, 1);
  out(1, 0) = (*this)(1, 0) * o(0, 0) + (*this)(1, 1) * o(1, 0);
  out(1, 1) = (*this)(1, 0) * o(0, 1) + (*this)(1, 1) * o(1, 1);
  return out;
}

Mat2 inverse_branching_matrix(const HawkesParams& params) {
  const double r = branching_ratio(params);
  // 1/(1-r^2) = (1/(1-r) + 1/(1+r))/2 on the diagonal, half the difference
  // off it; summing a row then reassembles 1/(1-r) with no extra rounding.
  const double inv_lo = 1.0 / (1.0 - r);
  const double inv_hi = 1.0 / (1.0 + r);
  const double diag = 0.5 * (inv_lo + inv_hi);
  const double off = 0.5 * (inv_lo - inv_hi);
  Mat2 out;
  out(0, 0) = diag;
  out(0, 1) = off;
  out(1, 0) = off;
  out(1, 1) = diag;
  return out;
}

IntensityState advance_state(const IntensityState& state, double beta, double dt,
                             const MarkedEvent* new_event) {
  if (dt < 0.0) throw NegativeTimeStep("advance_state requires dt >= 0");
  IntensityState out = state;
  if (dt > 0.0) {
    const double decay = std::exp(-beta * dt);
    out.s_plus *= decay;
    out.s_minus *= decay;
    out.t += dt;
  }
  if (new_event != nullptr) {
    if (new_event->sign == Sign::up) {
      out.s_plus += new_event->mark;
    } else {
      out.s_minus += new_event->mark;
    }
  }
  return out;
}

IntensityPair intensities_at(const HawkesParams& params, const IntensityState& state) {
  const double mu = params.baseline(state.t);
  return {mu + params.alpha * state.s_minus, mu + params.alpha * state.s_plus};
}

}  // namespace hawkes
