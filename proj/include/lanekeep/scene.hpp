// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lanekeep/lidar.hpp"
#include "lanekeep/track.hpp"
#include "lanekeep/vehicle.hpp"

namespace lanekeep {

enum class CurvatureClass { kStraight, kGentleCurve, kSharpCurve };
enum class CurveDirection { kLeft, kRight, kNone };
enum class ObstacleDistanceClass { kNear, kMid, kFar, kNone };

struct SceneDescriptor {
  CurvatureClass curvature_class = CurvatureClass::kStraight;
  CurveDirection curve_direction = CurveDirection::kNone;
  bool obstacle_ahead = false;
  ObstacleDistanceClass obstacle_distance_class = ObstacleDistanceClass::kNone;
  bool lane_marking_visible = true;

  bool operator==(const SceneDescriptor&) const = default;

  SceneDescriptor mirrored() const {
    SceneDescriptor m = *this;
    if (curve_direction == CurveDirection::kLeft) {
      m.curve_direction = CurveDirection::kRight;
    } else if (curve_direction == CurveDirection::kRight) {
      m.curve_direction = CurveDirection::kLeft;
    }
    return m;
  }
};

struct SceneParams {
  double lookahead = 5.0;            // curvature sampled this far ahead, m
  double gentle_curvature = 1.0 / 150.0;
  double sharp_curvature = 1.0 / 30.0;
  double near_distance = 4.0;        // distance bands shared with the reward
  double mid_distance = 8.0;
  double ahead_half_angle = kPi / 6.0;  // blocking rays within +-30 degrees
};

SceneDescriptor describe_scene(const VehicleState& state, const TrackSpec& track,
                               const LidarScan& scan,
                               const SceneParams& params = {});

}  // namespace lanekeep
