// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "lanekeep/types.hpp"

namespace lanekeep {

struct PidGains {
  double kp = 0.8;
  double ki = 0.05;
  double kd = 0.3;
  double i_max = 2.0;   // integral bound
  double u_max = 1.0;   // output bound
  double dt = 0.05;     // s

  void validate() const {
    require_finite(kp, "kp");
    require_finite(ki, "ki");
    require_finite(kd, "kd");
    if (i_max <= 0.0 || u_max <= 0.0 || dt <= 0.0) {
      throw ConfigError("pid bounds and dt must be positive");
    }
  }
};

struct PidState {
  double integral = 0.0;
  double prev_error = 0.0;
  double last_output = 0.0;
};

inline PidState pid_reset(const PidGains&) { return PidState{}; }

// One controller step. The integral accumulates first and is clipped before
// it enters the output sum; the output is clipped last.
inline std::pair<PidState, double> pid_step(const PidState& state, double error,
                                            const PidGains& g) {
  require_finite(error, "pid error");
  PidState next;
  next.integral = clip(state.integral + error * g.dt, -g.i_max, g.i_max);
  const double raw = g.kp * error + g.ki * next.integral +
                     g.kd * (error - state.prev_error) / g.dt;
  next.prev_error = error;
  next.last_output = clip(raw, -g.u_max, g.u_max);
  return {next, next.last_output};
}

}  // namespace lanekeep
