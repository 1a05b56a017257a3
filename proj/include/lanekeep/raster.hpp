// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lanekeep/track.hpp"
#include "lanekeep/types.hpp"
#include "lanekeep/vehicle.hpp"

namespace lanekeep {

// Front-view grayscale rendering of the lane, intensities in [0, 1].
// Row 0 is the top of the image; only rows below the horizon carry road.
struct LaneRaster {
  Mat pixels;        // H x W
  double px_per_m = 10.0;  // lateral scale at the bottom (reference) row

  int height() const { return static_cast<int>(pixels.rows()); }
  int width() const { return static_cast<int>(pixels.cols()); }

  LaneRaster flipped_horizontal() const {
    LaneRaster f = *this;
    f.pixels = pixels.rowwise().reverse();
    return f;
  }
};

struct RasterParams {
  int height = 64;
  int width = 64;
  double px_per_m = 10.0;     // lateral pixels per meter at the bottom row
  double horizon_frac = 0.25; // rows above this fraction stay empty
  double z_min = 2.0;         // ground distance of the bottom row, m
  double line_intensity = 1.0;
  double road_intensity = 0.15;
};

LaneRaster render_raster(const VehicleState& state, const TrackSpec& track,
                         const RasterParams& params = {});

// Binary PGM (P5) encoding for debugging dumps.
std::string raster_to_pgm(const LaneRaster& raster);

}  // namespace lanekeep
