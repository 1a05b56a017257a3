// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lanekeep/track.hpp"
#include "lanekeep/vehicle.hpp"

namespace lanekeep {

struct LidarScan {
  std::vector<double> ranges;  // meters, (0, max_range]
  double max_range = 12.0;
  double d_min = 12.0;

  // Beam direction offset from the vehicle heading for ray i, CCW-positive.
  // Rays sweep a symmetric 180-degree forward fan from right to left; there
  // is no exact on-axis ray, the fan is symmetric about the heading. The
  // centered form guarantees ray_offset(count-1-i) == -ray_offset(i) in
  // floating point, which makes mirrored worlds reverse the scan bit-exactly.
  static double ray_offset(int i, int count) {
    return (static_cast<double>(i) - 0.5 * (count - 1)) * (kPi / count);
  }
};

struct LidarParams {
  int ray_count = 180;
  double max_range = 12.0;
  // Distance from the centerline to a reflecting wall on each side;
  // 0 disables walls and rays see obstacles only.
  double boundary_offset = 0.0;
};

LidarScan cast_lidar(const VehicleState& state, const TrackSpec& track,
                     const LidarParams& params = {});

}  // namespace lanekeep
