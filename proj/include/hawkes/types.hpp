#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hawkes/errors.hpp"

namespace hawkes {

// Direction of a price move. The mark (jump size) is always positive; the
// sign lives here and nowhere else.
enum class Sign : std::int8_t { up = +1, down = -1 };

inline int sign_value(Sign s) { return s == Sign::up ? +1 : -1; }

// One marked point event: time in hours from session start, direction,
// and absolute jump size in EUR/MWh.
struct MarkedEvent {
  double t = 0.0;
  Sign sign = Sign::up;
  double mark = 0.0;
};

// Time-ordered marked events over one trading session.
struct EventStream {
  std::string session_id;
  double horizon = 0.0;  // hours
  std::vector<MarkedEvent> events;

  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }
};

// Throws if event times are not strictly increasing, fall outside
// [0, horizon], or any mark is not strictly positive.
void check_stream(const EventStream& stream);

// Uniform-step price series. `t0_ms` anchors the grid in absolute time
// (epoch milliseconds); simulated grids use t0_ms = 0.
struct GridSeries {
  std::int64_t t0_ms = 0;
  double step_s = 1.0;
  std::vector<double> values;
  std::string label;

  double span_hours() const {
    return values.empty() ? 0.0 : step_s * static_cast<double>(values.size() - 1) / 3600.0;
  }
};

// Generic (abscissa, value[, std_err]) table; the payload of every curve
// the library reports. Abscissa is in hours unless the label says otherwise.
struct CurveTable {
  std::vector<double> abscissa;
  std::vector<double> values;
  std::vector<double> std_err;  // empty, or same length as values
  std::string label;

  std::size_t size() const { return abscissa.size(); }
};

// Outcome of a statistical test at level 95%.
struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  std::size_t m = 0;  // second sample size (two-sample tests)
  bool rejected_at_95 = false;
};

}  // namespace hawkes
