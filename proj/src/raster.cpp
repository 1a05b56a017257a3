// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/raster.hpp"

#include <cmath>
#include <cstdint>

namespace lanekeep {

namespace {

// Bilinear deposit of a line sample at continuous column u.
void deposit(Mat& img, int row, double u, double intensity) {
  const int w = static_cast<int>(img.cols());
  const double c0f = std::floor(u);
  const int c0 = static_cast<int>(c0f);
  const double frac = u - c0f;
  if (c0 >= 0 && c0 < w) {
    img(row, c0) = std::min(1.0, img(row, c0) + intensity * (1.0 - frac));
  }
  if (c0 + 1 >= 0 && c0 + 1 < w) {
    img(row, c0 + 1) = std::min(1.0, img(row, c0 + 1) + intensity * frac);
  }
}

}  // namespace

LaneRaster render_raster(const VehicleState& state, const TrackSpec& track,
                         const RasterParams& p) {
  LaneRaster raster;
  raster.px_per_m = p.px_per_m;
  raster.pixels = Mat::Zero(p.height, p.width);

  const int horizon = static_cast<int>(std::lround(p.height * p.horizon_frac));
  const int bottom = p.height - 1;
  const double cx = 0.5 * (p.width - 1);
  const double focal = p.px_per_m * p.z_min;  // column = cx - focal * lat / z
  const double half_lane = 0.5 * track.lane_width;

  const double ch = std::cos(state.heading);
  const double sh = std::sin(state.heading);

  for (int r = horizon + 1; r <= bottom; ++r) {
    const double z = p.z_min * static_cast<double>(bottom - horizon) /
                     static_cast<double>(r - horizon);
    const double s = state.track_s + z;
    if (s > track.length) continue;
    const Vec2 c = track.point_at(s);
    const double th = track.heading_at(s);
    const Vec2 left_n(-std::sin(th), std::cos(th));

    // Lane center and left boundary in the vehicle frame (left-positive y).
    const Vec2 dc = c - state.position;
    const Vec2 dl = dc + half_lane * left_n;
    const double lat_c = -dc.x() * sh + dc.y() * ch;
    const double lat_l = -dl.x() * sh + dl.y() * ch;

    const double u_c = cx - focal * lat_c / z;
    const double u_l = cx - focal * lat_l / z;
    // Mirror partner of the left boundary around the lane-center column; the
    // reflected form keeps a centered view symmetric to the last bit.
    const double u_r = 2.0 * u_c - u_l;

    const double half_span = std::abs(u_r - u_c);
    for (int col = 0; col < p.width; ++col) {
      if (std::abs(col - u_c) < half_span - 0.5) {
        raster.pixels(r, col) = p.road_intensity;
      }
    }
    deposit(raster.pixels, r, u_l, p.line_intensity);
    deposit(raster.pixels, r, u_r, p.line_intensity);
  }
  return raster;
}

std::string raster_to_pgm(const LaneRaster& raster) {
  std::string out = "P5\n" + std::to_string(raster.width()) + " " +
                    std::to_string(raster.height()) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(raster.height()) *
                               static_cast<std::size_t>(raster.width()));
  for (int r = 0; r < raster.height(); ++r) {
    for (int c = 0; c < raster.width(); ++c) {
      const double v = clip(raster.pixels(r, c), 0.0, 1.0);
      out.push_back(static_cast<char>(static_cast<std::uint8_t>(std::lround(v * 255.0))));
    }
  }
  return out;
}

}  // namespace lanekeep
