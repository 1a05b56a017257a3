// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "lanekeep/track.hpp"
#include "lanekeep/types.hpp"

namespace lanekeep {

struct VehicleState {
  Vec2 position{0.0, 0.0};
  double heading = 0.0;       // CCW, wrapped to (-pi, pi]
  double speed = 0.0;         // m/s, >= 0
  double lateral_offset = 0.0;  // signed meters, + = right of centerline
  double heading_error = 0.0;   // wrapped heading - centerline tangent
  double track_s = 0.0;         // arclength progress of the nearest point
  int step_index = 0;
  double elapsed = 0.0;
};

struct DynamicsParams {
  double wheelbase = 2.5;           // m
  double max_steering_angle = 0.5;  // rad
  double speed_tau = 0.5;           // first-order speed lag, s
  double dt = 0.05;                 // s
};

// Kinematic bicycle step. `steering` is right-positive (+ turns toward
// +lateral_offset), `target_speed` in m/s. Throws on non-finite input.
VehicleState step_dynamics(const VehicleState& state, double steering,
                           double target_speed, const TrackSpec& track,
                           const DynamicsParams& params);

// Recompute lateral_offset / heading_error / track_s against the track.
void refresh_track_frame(VehicleState& state, const TrackSpec& track);

// Start pose for episode `episode_index`: tracks cycle through the pool and
// the initial lateral offset gets a seeded jitter in [-jitter, +jitter].
std::pair<VehicleState, const TrackSpec*> reset_episode(
    const std::vector<TrackSpec>& pool, int episode_index,
    std::uint64_t seed, double jitter = 0.5);

}  // namespace lanekeep
