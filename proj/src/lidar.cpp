// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/lidar.hpp"

#include <algorithm>
#include <cmath>

namespace lanekeep {

namespace {

// First positive hit of a ray against a circle, or +inf.
double ray_circle(const Vec2& origin, const Vec2& dir, const Vec2& center,
                  double radius) {
  const Vec2 oc = center - origin;
  const double proj = oc.dot(dir);
  if (proj + radius < 0.0) return std::numeric_limits<double>::infinity();
  const double d2 = oc.squaredNorm() - proj * proj;
  const double r2 = radius * radius;
  if (d2 > r2) return std::numeric_limits<double>::infinity();
  const double t = proj - std::sqrt(r2 - d2);
  if (t <= 1e-9) return std::numeric_limits<double>::infinity();
  return t;
}

double ray_segment(const Vec2& origin, const Vec2& dir, const Vec2& a,
                   const Vec2& b) {
  const Vec2 e = b - a;
  const double denom = dir.x() * e.y() - dir.y() * e.x();
  if (std::abs(denom) < 1e-14) return std::numeric_limits<double>::infinity();
  const Vec2 ao = a - origin;
  const double t = (ao.x() * e.y() - ao.y() * e.x()) / denom;
  const double u = (ao.x() * dir.y() - ao.y() * dir.x()) / -denom;
  if (t <= 1e-9 || u < 0.0 || u > 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace

LidarScan cast_lidar(const VehicleState& state, const TrackSpec& track,
                     const LidarParams& p) {
  LidarScan scan;
  scan.max_range = p.max_range;
  scan.ranges.assign(static_cast<std::size_t>(p.ray_count), p.max_range);

  // Optional boundary walls: offset polylines sampled around the vehicle.
  std::vector<Vec2> wall_left, wall_right;
  if (p.boundary_offset > 0.0) {
    const double s0 = std::max(0.0, state.track_s - p.max_range - 2.0);
    const double s1 = std::min(track.length, state.track_s + p.max_range + 2.0);
    for (double s = s0; s <= s1; s += 2.0) {
      const Vec2 c = track.point_at(s);
      const double h = track.heading_at(s);
      const Vec2 right(std::sin(h), -std::cos(h));
      wall_left.push_back(c - p.boundary_offset * right);
      wall_right.push_back(c + p.boundary_offset * right);
    }
  }

  for (int i = 0; i < p.ray_count; ++i) {
    const double angle = state.heading + LidarScan::ray_offset(i, p.ray_count);
    const Vec2 dir(std::cos(angle), std::sin(angle));
    double best = p.max_range;
    for (const Obstacle& ob : track.obstacles) {
      best = std::min(best, ray_circle(state.position, dir, ob.position, ob.radius));
    }
    for (const auto* wall : {&wall_left, &wall_right}) {
      for (std::size_t k = 0; k + 1 < wall->size(); ++k) {
        best = std::min(best,
                        ray_segment(state.position, dir, (*wall)[k], (*wall)[k + 1]));
      }
    }
    scan.ranges[static_cast<std::size_t>(i)] = std::max(1e-6, std::min(best, p.max_range));
  }
  scan.d_min = *std::min_element(scan.ranges.begin(), scan.ranges.end());
  return scan;
}

}  // namespace lanekeep
