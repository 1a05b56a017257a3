// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/vehicle.hpp"

#include <cmath>
#include <stdexcept>

#include "lanekeep/rng.hpp"

namespace lanekeep {

void refresh_track_frame(VehicleState& state, const TrackSpec& track) {
  const TrackFrame frame = track.project(state.position);
  state.lateral_offset = frame.lateral;
  state.heading_error = wrap_angle(state.heading - frame.tangent_heading);
  state.track_s = frame.s;
}

VehicleState step_dynamics(const VehicleState& state, double steering,
                           double target_speed, const TrackSpec& track,
                           const DynamicsParams& p) {
  require_finite(steering, "steering");
  require_finite(target_speed, "target_speed");
  if (p.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  steering = clip(steering, -p.max_steering_angle, p.max_steering_angle);
  if (target_speed < 0.0) target_speed = 0.0;

  VehicleState next = state;
  const double v = state.speed + (target_speed - state.speed) * (p.dt / p.speed_tau);
  next.speed = v < 0.0 ? 0.0 : v;
  // Right-positive steering turns clockwise, hence the sign.
  const double yaw_rate = -(next.speed / p.wheelbase) * std::tan(steering);
  const double dpsi = yaw_rate * p.dt;
  const double mid_heading = state.heading + 0.5 * dpsi;
  next.position.x() = state.position.x() + next.speed * p.dt * std::cos(mid_heading);
  next.position.y() = state.position.y() + next.speed * p.dt * std::sin(mid_heading);
  next.heading = wrap_angle(state.heading + dpsi);
  next.step_index = state.step_index + 1;
  next.elapsed = state.elapsed + p.dt;
  refresh_track_frame(next, track);
  return next;
}

std::pair<VehicleState, const TrackSpec*> reset_episode(
    const std::vector<TrackSpec>& pool, int episode_index,
    std::uint64_t seed, double jitter) {
  if (pool.empty()) throw std::invalid_argument("track pool is empty");
  const TrackSpec& track = pool[static_cast<std::size_t>(episode_index) % pool.size()];
  Rng rng(Rng::derive_seed(seed, 0x9000 + static_cast<std::uint64_t>(episode_index)));
  const double dx0 = rng.uniform(-jitter, jitter);

  VehicleState state;
  const double h = track.heading_at(0.0);
  const Vec2 right(std::sin(h), -std::cos(h));
  state.position = track.point_at(0.0) + dx0 * right;
  state.heading = h;
  state.speed = 0.0;
  state.step_index = 0;
  state.elapsed = 0.0;
  refresh_track_frame(state, track);
  return {state, &track};
}

}  // namespace lanekeep
