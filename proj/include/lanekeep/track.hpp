// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lanekeep/types.hpp"

namespace lanekeep {

enum class TrackProfile { kStraight, kCurves, kMixed };

TrackProfile track_profile_from_string(const std::string& s);
std::string to_string(TrackProfile p);

struct Obstacle {
  Vec2 position{0.0, 0.0};
  double radius = 0.5;
};

// One centerline piece. curvature == 0 is a straight line, otherwise an arc
// with radius 1/|curvature|; positive curvature bends left (CCW heading).
struct Segment {
  Vec2 start{0.0, 0.0};
  double heading = 0.0;
  double length = 0.0;
  double curvature = 0.0;
  double s0 = 0.0;  // arclength of `start` along the whole track
};

// Result of projecting a world point onto the centerline.
struct TrackFrame {
  double s = 0.0;               // arclength of the nearest centerline point
  double lateral = 0.0;         // signed offset, + = right of centerline
  double distance = 0.0;        // |lateral|
  double tangent_heading = 0.0; // centerline heading at s
  double curvature = 0.0;
};

struct TrackSpec {
  std::uint64_t seed = 0;
  TrackProfile profile = TrackProfile::kStraight;
  double lane_width = 5.0;
  double length = 0.0;
  std::vector<Segment> segments;
  std::vector<Obstacle> obstacles;

  Vec2 point_at(double s) const;
  double heading_at(double s) const;
  double curvature_at(double s) const;
  TrackFrame project(const Vec2& p) const;

  // Left-right mirror of the whole world about the x axis. Pure sign flips,
  // so every derived quantity mirrors bit-exactly.
  TrackSpec mirrored() const;

  std::string to_json() const;
  static TrackSpec from_json(const std::string& text);

 private:
  std::size_t segment_index(double s) const;
};

struct TrackGenParams {
  double lane_width = 5.0;
  double min_turn_radius = 20.0;
  double min_length = 250.0;
  double obstacle_spacing_min = 35.0;
  double obstacle_spacing_max = 70.0;
  // Distance between obstacle surface and any centerline point must stay
  // above this; keeps a centered driver clear of the d_fail band.
  double obstacle_clearance = 2.6;
  bool with_obstacles = true;
};

TrackSpec generate_track(std::uint64_t seed, TrackProfile profile,
                         const TrackGenParams& params = {});

// Serialize / load a pool of tracks as one versioned JSON document.
std::string track_pool_to_json(const std::vector<TrackSpec>& pool);
std::vector<TrackSpec> track_pool_from_json(const std::string& text);

}  // namespace lanekeep
