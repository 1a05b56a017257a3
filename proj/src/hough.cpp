// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/hough.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lanekeep {

namespace {

struct Peak {
  int rho_bin;
  int theta_bin;
  int votes;
  double rho;     // refined, px
  double theta;   // rad
};

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

LaneEstimate hough_lane_offset(const LaneRaster& raster, const HoughParams& p) {
  const int h = raster.height();
  const int w = raster.width();
  const double rho_max = std::hypot(static_cast<double>(h), static_cast<double>(w));
  const int n_rho = 2 * static_cast<int>(std::ceil(rho_max / p.rho_bin_px)) + 1;
  const int rho_center = n_rho / 2;
  const int n_theta =
      2 * static_cast<int>(std::lround(p.theta_limit_deg / p.theta_bin_deg)) + 1;
  const int theta_center = n_theta / 2;
  const double theta_step = p.theta_bin_deg * kPi / 180.0;

  std::vector<double> cos_t(static_cast<std::size_t>(n_theta));
  std::vector<double> sin_t(static_cast<std::size_t>(n_theta));
  for (int k = 0; k < n_theta; ++k) {
    const double theta = (k - theta_center) * theta_step;
    cos_t[static_cast<std::size_t>(k)] = std::cos(theta);
    sin_t[static_cast<std::size_t>(k)] = std::sin(theta);
  }

  std::vector<int> acc(static_cast<std::size_t>(n_rho * n_theta), 0);
  int on_pixels = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (raster.pixels(y, x) <= p.threshold) continue;
      ++on_pixels;
      for (int k = 0; k < n_theta; ++k) {
        const double rho = x * cos_t[static_cast<std::size_t>(k)] +
                           y * sin_t[static_cast<std::size_t>(k)];
        const int rbin = rho_center + static_cast<int>(std::lround(rho / p.rho_bin_px));
        if (rbin >= 0 && rbin < n_rho) {
          ++acc[static_cast<std::size_t>(rbin * n_theta + k)];
        }
      }
    }
  }

  LaneEstimate est;
  if (on_pixels == 0) return est;

  // Candidate bins above the vote floor, strongest first, then greedy
  // non-max suppression in (rho, theta) neighborhoods.
  std::vector<int> candidates;
  for (int i = 0; i < n_rho * n_theta; ++i) {
    if (acc[static_cast<std::size_t>(i)] >= p.min_votes) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(), [&acc](int a, int b) {
    const int va = acc[static_cast<std::size_t>(a)];
    const int vb = acc[static_cast<std::size_t>(b)];
    return va != vb ? va > vb : a < b;
  });

  std::vector<Peak> peaks;
  for (int idx : candidates) {
    if (peaks.size() >= 8) break;
    const int rbin = idx / n_theta;
    const int tbin = idx % n_theta;
    bool suppressed = false;
    for (const Peak& q : peaks) {
      if (std::abs(q.rho_bin - rbin) <= 3 && std::abs(q.theta_bin - tbin) <= 5) {
        suppressed = true;
        break;
      }
    }
    if (suppressed) continue;

    // Vote-weighted centroid over the neighboring rho bins at this theta
    // sharpens the line position below the bin width.
    double num = 0.0, den = 0.0;
    for (int dr = -1; dr <= 1; ++dr) {
      const int rb = rbin + dr;
      if (rb < 0 || rb >= n_rho) continue;
      const double v = acc[static_cast<std::size_t>(rb * n_theta + tbin)];
      num += v * (rb - rho_center) * p.rho_bin_px;
      den += v;
    }
    Peak peak;
    peak.rho_bin = rbin;
    peak.theta_bin = tbin;
    peak.votes = acc[static_cast<std::size_t>(idx)];
    peak.rho = den > 0.0 ? num / den : (rbin - rho_center) * p.rho_bin_px;
    peak.theta = (tbin - theta_center) * theta_step;
    peaks.push_back(peak);
  }

  // Best pair with opposite-signed slopes (slope sign = -sign(theta); exactly
  // vertical lines pair with anything).
  int best_votes = -1;
  std::size_t pick_a = 0, pick_b = 0;
  bool found = false;
  for (std::size_t a = 0; a < peaks.size(); ++a) {
    for (std::size_t b = a + 1; b < peaks.size(); ++b) {
      if (sign_of(peaks[a].theta) * sign_of(peaks[b].theta) > 0) continue;
      const int votes = peaks[a].votes + peaks[b].votes;
      if (votes > best_votes) {
        best_votes = votes;
        pick_a = a;
        pick_b = b;
        found = true;
      }
    }
  }
  if (!found) return est;

  const Peak& pa = peaks[pick_a];
  const Peak& pb = peaks[pick_b];
  const double y_ref = h - 1;
  const double xa = (pa.rho - y_ref * std::sin(pa.theta)) / std::cos(pa.theta);
  const double xb = (pb.rho - y_ref * std::sin(pb.theta)) / std::cos(pb.theta);

  const HoughLine line_a{pa.rho, pa.theta, pa.votes};
  const HoughLine line_b{pb.rho, pb.theta, pb.votes};
  if (xa <= xb) {
    est.left_line = line_a;
    est.right_line = line_b;
  } else {
    est.left_line = line_b;
    est.right_line = line_a;
  }
  est.offset_px = clip(0.5 * w - 0.5 * (xa + xb), -0.5 * w, 0.5 * w);
  const int rows_below = std::max(1, h - 1 - static_cast<int>(std::lround(h * 0.25)));
  est.confidence = clip(static_cast<double>(std::min(pa.votes, pb.votes)) /
                            static_cast<double>(rows_below),
                        0.0, 1.0);
  if (est.confidence <= 0.0) est.confidence = 0.01;
  return est;
}

OffsetMode offset_mode_from_string(const std::string& s) {
  if (s == "hough") return OffsetMode::kHough;
  if (s == "ground_truth") return OffsetMode::kGroundTruth;
  if (s == "ground_truth_noisy") return OffsetMode::kGroundTruthNoisy;
  throw ConfigError("unknown offset mode: " + s);
}

std::string to_string(OffsetMode m) {
  switch (m) {
    case OffsetMode::kHough: return "hough";
    case OffsetMode::kGroundTruth: return "ground_truth";
    case OffsetMode::kGroundTruthNoisy: return "ground_truth_noisy";
  }
  return "hough";
}

double OffsetSource::update(const LaneEstimate& estimate, double ground_truth_px) {
  switch (mode_) {
    case OffsetMode::kGroundTruth:
      last_px_ = ground_truth_px;
      break;
    case OffsetMode::kGroundTruthNoisy:
      last_px_ = ground_truth_px + rng_.gaussian(0.0, noise_sigma_px_);
      break;
    case OffsetMode::kHough:
      if (estimate.confidence > 0.0) {
        // Raster pixels -> meters -> reward pixels. The ratio is 1.0 exactly
        // when the raster already uses the reward scale.
        last_px_ = estimate.offset_px * (kMToPx / raster_px_per_m_);
      }
      break;
  }
  return last_px_;
}

}  // namespace lanekeep
