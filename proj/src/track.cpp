// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/track.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lanekeep/rng.hpp"

namespace lanekeep {

using nlohmann::json;

TrackProfile track_profile_from_string(const std::string& s) {
  if (s == "straight") return TrackProfile::kStraight;
  if (s == "curves") return TrackProfile::kCurves;
  if (s == "mixed") return TrackProfile::kMixed;
  throw ConfigError("unknown track profile: " + s);
}

std::string to_string(TrackProfile p) {
  switch (p) {
    case TrackProfile::kStraight: return "straight";
    case TrackProfile::kCurves: return "curves";
    case TrackProfile::kMixed: return "mixed";
  }
  return "straight";
}

namespace {

Vec2 segment_point(const Segment& seg, double u) {
  if (seg.curvature == 0.0) {
    return seg.start + u * Vec2(std::cos(seg.heading), std::sin(seg.heading));
  }
  const double k = seg.curvature;
  const double h1 = seg.heading + k * u;
  return seg.start + Vec2((std::sin(h1) - std::sin(seg.heading)) / k,
                          (-std::cos(h1) + std::cos(seg.heading)) / k);
}

double segment_heading(const Segment& seg, double u) {
  return seg.heading + seg.curvature * u;
}

// Closest point on one segment, returned as arclength within [0, length].
double segment_project(const Segment& seg, const Vec2& p) {
  if (seg.curvature == 0.0) {
    const Vec2 dir(std::cos(seg.heading), std::sin(seg.heading));
    const double t = (p - seg.start).dot(dir);
    return clip(t, 0.0, seg.length);
  }
  const double k = seg.curvature;
  const Vec2 center =
      seg.start + (1.0 / k) * Vec2(-std::sin(seg.heading), std::cos(seg.heading));
  const Vec2 d = p - center;
  if (d.squaredNorm() < 1e-18) return 0.0;
  const double phi0 =
      std::atan2(seg.start.y() - center.y(), seg.start.x() - center.x());
  const double phi = std::atan2(d.y(), d.x());
  // Angular progress from the arc start, in the direction of travel,
  // unwrapped into one full turn.
  double prog = k > 0.0 ? phi - phi0 : phi0 - phi;
  prog -= 2.0 * kPi * std::floor(prog / (2.0 * kPi));
  const double u = prog / std::abs(k);
  if (u <= seg.length) return u;
  // Radial projection falls outside the arc; one of the endpoints is nearest.
  const Vec2 end = segment_point(seg, seg.length);
  return (p - seg.start).squaredNorm() <= (p - end).squaredNorm() ? 0.0
                                                                  : seg.length;
}

}  // namespace

std::size_t TrackSpec::segment_index(double s) const {
  // Binary search over cumulative start arclengths.
  std::size_t lo = 0, hi = segments.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (segments[mid].s0 <= s) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Vec2 TrackSpec::point_at(double s) const {
  s = clip(s, 0.0, length);
  const Segment& seg = segments[segment_index(s)];
  return segment_point(seg, clip(s - seg.s0, 0.0, seg.length));
}

double TrackSpec::heading_at(double s) const {
  s = clip(s, 0.0, length);
  const Segment& seg = segments[segment_index(s)];
  return segment_heading(seg, clip(s - seg.s0, 0.0, seg.length));
}

double TrackSpec::curvature_at(double s) const {
  s = clip(s, 0.0, length);
  return segments[segment_index(s)].curvature;
}

TrackFrame TrackSpec::project(const Vec2& p) const {
  TrackFrame best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const Segment& seg : segments) {
    const double u = segment_project(seg, p);
    const Vec2 q = segment_point(seg, u);
    const double d2 = (p - q).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best.s = seg.s0 + u;
      best.tangent_heading = segment_heading(seg, u);
      best.curvature = seg.curvature;
      const double ch = std::cos(best.tangent_heading);
      const double sh = std::sin(best.tangent_heading);
      const Vec2 d = p - q;
      // Right normal is (sin h, -cos h).
      best.lateral = d.x() * sh - d.y() * ch;
      best.distance = std::sqrt(d2);
    }
  }
  return best;
}

TrackSpec TrackSpec::mirrored() const {
  TrackSpec m = *this;
  for (Segment& seg : m.segments) {
    seg.start.y() = -seg.start.y();
    seg.heading = -seg.heading;
    seg.curvature = -seg.curvature;
  }
  for (Obstacle& ob : m.obstacles) {
    ob.position.y() = -ob.position.y();
  }
  return m;
}

namespace {

json track_to_json_obj(const TrackSpec& t) {
  json segs = json::array();
  for (const Segment& s : t.segments) {
    segs.push_back({{"x", s.start.x()},
                    {"y", s.start.y()},
                    {"heading", s.heading},
                    {"length", s.length},
                    {"curvature", s.curvature}});
  }
  json obs = json::array();
  for (const Obstacle& o : t.obstacles) {
    obs.push_back({{"x", o.position.x()}, {"y", o.position.y()}, {"radius", o.radius}});
  }
  return json{{"seed", t.seed},
              {"profile", to_string(t.profile)},
              {"lane_width", t.lane_width},
              {"segments", segs},
              {"obstacles", obs}};
}

TrackSpec track_from_json_obj(const json& j) {
  TrackSpec t;
  t.seed = j.at("seed").get<std::uint64_t>();
  t.profile = track_profile_from_string(j.at("profile").get<std::string>());
  t.lane_width = j.at("lane_width").get<double>();
  if (t.lane_width <= 0.0) throw ConfigError("lane_width must be positive");
  double s0 = 0.0;
  for (const json& js : j.at("segments")) {
    Segment s;
    s.start = Vec2(js.at("x").get<double>(), js.at("y").get<double>());
    s.heading = js.at("heading").get<double>();
    s.length = js.at("length").get<double>();
    s.curvature = js.at("curvature").get<double>();
    s.s0 = s0;
    s0 += s.length;
    t.segments.push_back(s);
  }
  if (t.segments.empty()) throw ConfigError("track needs at least one segment");
  t.length = s0;
  for (const json& jo : j.at("obstacles")) {
    Obstacle o;
    o.position = Vec2(jo.at("x").get<double>(), jo.at("y").get<double>());
    o.radius = jo.at("radius").get<double>();
    if (o.radius <= 0.0) throw ConfigError("obstacle radius must be positive");
    t.obstacles.push_back(o);
  }
  return t;
}

}  // namespace

std::string TrackSpec::to_json() const {
  json j = track_to_json_obj(*this);
  j["version"] = 1;
  return j.dump(2);
}

TrackSpec TrackSpec::from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("version").get<int>() != 1) throw ConfigError("unsupported track version");
  return track_from_json_obj(j);
}

std::string track_pool_to_json(const std::vector<TrackSpec>& pool) {
  json arr = json::array();
  for (const TrackSpec& t : pool) arr.push_back(track_to_json_obj(t));
  return json{{"version", 1}, {"tracks", arr}}.dump(2);
}

std::vector<TrackSpec> track_pool_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("version").get<int>() != 1) throw ConfigError("unsupported track pool version");
  std::vector<TrackSpec> pool;
  for (const json& jt : j.at("tracks")) pool.push_back(track_from_json_obj(jt));
  if (pool.empty()) throw ConfigError("track pool is empty");
  return pool;
}

namespace {

void append_segment(TrackSpec& t, double length, double curvature) {
  Segment seg;
  if (t.segments.empty()) {
    seg.start = Vec2(0.0, 0.0);
    seg.heading = 0.0;
    seg.s0 = 0.0;
  } else {
    const Segment& prev = t.segments.back();
    seg.start = segment_point(prev, prev.length);
    seg.heading = segment_heading(prev, prev.length);
    seg.s0 = prev.s0 + prev.length;
  }
  seg.length = length;
  seg.curvature = curvature;
  t.segments.push_back(seg);
  t.length = seg.s0 + seg.length;
}

void place_obstacles(TrackSpec& t, Rng& rng, const TrackGenParams& p) {
  double s = 20.0;
  const Vec2 spawn = t.point_at(0.0);
  while (s < t.length - 15.0) {
    const double side = rng.uniform() < 0.5 ? 1.0 : -1.0;
    // Mostly the close band, sometimes the far one.
    const double lateral = rng.uniform() < 0.65 ? rng.uniform(3.4, 4.4)
                                                : rng.uniform(8.2, 10.0);
    const double radius = rng.uniform(0.3, 0.5);
    const double h = t.heading_at(s);
    const Vec2 right(std::sin(h), -std::cos(h));
    Obstacle ob;
    ob.position = t.point_at(s) + side * lateral * right;
    ob.radius = radius;

    // Keep the obstacle surface clear of every centerline point, not just
    // the one it was seeded from (curved tracks can loop back).
    bool ok = (ob.position - spawn).norm() > 10.0;
    for (double u = 0.0; ok && u <= t.length; u += 0.5) {
      if ((t.point_at(u) - ob.position).norm() < p.obstacle_clearance + radius) {
        ok = false;
      }
    }
    if (ok) t.obstacles.push_back(ob);
    s += rng.uniform(p.obstacle_spacing_min, p.obstacle_spacing_max);
  }
}

}  // namespace

TrackSpec generate_track(std::uint64_t seed, TrackProfile profile,
                         const TrackGenParams& p) {
  TrackSpec t;
  t.seed = seed;
  t.profile = profile;
  t.lane_width = p.lane_width;
  Rng rng(Rng::derive_seed(seed, 1));
  switch (profile) {
    case TrackProfile::kStraight:
      append_segment(t, std::max(p.min_length, 400.0), 0.0);
      break;
    case TrackProfile::kCurves: {
      append_segment(t, rng.uniform(15.0, 25.0), 0.0);
      double dir = rng.uniform() < 0.5 ? 1.0 : -1.0;
      while (t.length < p.min_length) {
        const double radius = rng.uniform(p.min_turn_radius, 80.0);
        const double arc_len = rng.uniform(20.0, 50.0);
        append_segment(t, arc_len, dir / radius);
        append_segment(t, rng.uniform(10.0, 30.0), 0.0);
        dir = rng.uniform() < 0.7 ? -dir : dir;
      }
      break;
    }
    case TrackProfile::kMixed: {
      append_segment(t, rng.uniform(20.0, 40.0), 0.0);
      while (t.length < p.min_length) {
        if (rng.uniform() < 0.45) {
          append_segment(t, rng.uniform(20.0, 60.0), 0.0);
        } else {
          const double radius = rng.uniform(p.min_turn_radius, 100.0);
          const double dir = rng.uniform() < 0.5 ? 1.0 : -1.0;
          append_segment(t, rng.uniform(15.0, 45.0), dir / radius);
        }
      }
      break;
    }
  }
  if (p.with_obstacles) place_obstacles(t, rng, p);
  return t;
}

}  // namespace lanekeep
