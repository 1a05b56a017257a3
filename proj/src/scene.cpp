// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/scene.hpp"

#include <cmath>

namespace lanekeep {

SceneDescriptor describe_scene(const VehicleState& state, const TrackSpec& track,
                               const LidarScan& scan, const SceneParams& p) {
  SceneDescriptor d;

  const double kappa = track.curvature_at(state.track_s + p.lookahead);
  const double mag = std::abs(kappa);
  if (mag < p.gentle_curvature) {
    d.curvature_class = CurvatureClass::kStraight;
    d.curve_direction = CurveDirection::kNone;
  } else {
    d.curvature_class = mag < p.sharp_curvature ? CurvatureClass::kGentleCurve
                                                : CurvatureClass::kSharpCurve;
    d.curve_direction = kappa > 0.0 ? CurveDirection::kLeft : CurveDirection::kRight;
  }

  const int n = static_cast<int>(scan.ranges.size());
  double ahead_min = scan.max_range;
  for (int i = 0; i < n; ++i) {
    if (std::abs(LidarScan::ray_offset(i, n)) <= p.ahead_half_angle) {
      ahead_min = std::min(ahead_min, scan.ranges[static_cast<std::size_t>(i)]);
    }
  }
  d.obstacle_ahead = ahead_min < scan.max_range;
  if (!d.obstacle_ahead) {
    d.obstacle_distance_class = ObstacleDistanceClass::kNone;
  } else if (ahead_min < p.near_distance) {
    d.obstacle_distance_class = ObstacleDistanceClass::kNear;
  } else if (ahead_min < p.mid_distance) {
    d.obstacle_distance_class = ObstacleDistanceClass::kMid;
  } else {
    d.obstacle_distance_class = ObstacleDistanceClass::kFar;
  }

  d.lane_marking_visible = true;
  return d;
}

}  // namespace lanekeep
