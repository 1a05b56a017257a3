// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "lanekeep/raster.hpp"
#include "lanekeep/rng.hpp"
#include "lanekeep/types.hpp"

namespace lanekeep {

struct HoughLine {
  double rho = 0.0;    // px, signed distance of the line from the origin
  double theta = 0.0;  // rad; 0 is a vertical image line
  int votes = 0;
};

struct LaneEstimate {
  double offset_px = 0.0;  // + = vehicle right of lane center, raster pixels
  double confidence = 0.0; // in [0, 1]; 0 iff both lines absent
  std::optional<HoughLine> left_line;
  std::optional<HoughLine> right_line;
};

struct HoughParams {
  double threshold = 0.5;          // binarization level
  double theta_limit_deg = 80.0;   // |theta| <= limit, excludes horizontals
  double theta_bin_deg = 1.0;
  double rho_bin_px = 1.0;
  int min_votes = 8;
};

// Detect the two dominant lane lines with opposite-signed image slopes and
// report the lane-center offset at the bottom row, measured from column W/2.
LaneEstimate hough_lane_offset(const LaneRaster& raster,
                               const HoughParams& params = {});

enum class OffsetMode { kHough, kGroundTruth, kGroundTruthNoisy };

OffsetMode offset_mode_from_string(const std::string& s);
std::string to_string(OffsetMode m);

// Turns per-frame estimates into the control error signal. Output is in
// "reward pixels" (the 5/235 m/px scale) regardless of mode, so modes are
// interchangeable downstream. Hough dropouts hold the last valid value.
class OffsetSource {
 public:
  OffsetSource(OffsetMode mode, double raster_px_per_m, std::uint64_t seed,
               double noise_sigma_px = 2.0)
      : mode_(mode),
        raster_px_per_m_(raster_px_per_m),
        noise_sigma_px_(noise_sigma_px),
        rng_(seed) {}

  double update(const LaneEstimate& estimate, double ground_truth_px);
  void reset() { last_px_ = 0.0; }
  OffsetMode mode() const { return mode_; }

 private:
  OffsetMode mode_;
  double raster_px_per_m_;
  double noise_sigma_px_;
  double last_px_ = 0.0;
  Rng rng_;
};

}  // namespace lanekeep
