// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "lanekeep/attention.hpp"
#include "lanekeep/caption.hpp"
#include "lanekeep/raster.hpp"

namespace lanekeep {

struct SemanticEmbedding {
  Vec e;
};

struct EncoderConfig {
  int dim = 32;        // embedding width d
  int rank = 4;        // LoRA rank r < d
  int queries = 4;     // learned query rows
  int max_tokens = 16; // caption length L
  int patch = 16;      // square patch edge for the image features
  std::uint64_t seed = 42;
};

// Frozen, seeded encoder weights. The LoRA B factors start at zero, so the
// low-rank path is initially a no-op by construction.
struct EncoderWeights {
  EncoderConfig cfg;
  Mat token_embedding;  // vocab x d
  AttentionWeights attn;
  LoraFactors lora;
  Mat q_learned;     // m x d
  Mat patch_proj;    // patch^2 x d
  Vec patch_bias;    // d
  Mat out_proj;      // d x d

  static EncoderWeights init(const EncoderConfig& cfg, int vocab_size);
};

// Non-overlapping patch embedding: (H/patch * W/patch) x d feature rows.
Mat encode_image_features(const LaneRaster& raster, const EncoderWeights& w);

struct EncodeOptions {
  bool use_lora = true;
  bool zero_image_branch = false;  // test hook: drop the visual contribution
};

SemanticEmbedding encode_semantics(const Caption& caption, const LaneRaster& raster,
                                   const EncoderWeights& w,
                                   const EncodeOptions& opts = {});

// Recompute-every-K-steps cache for the semantic embedding.
class SemanticCache {
 public:
  explicit SemanticCache(int k) : k_(k) {
    if (k_ < 1) throw std::invalid_argument("cache period must be >= 1");
  }

  const Vec& at_step(int step, const std::function<Vec()>& recompute) {
    if (step % k_ == 0 || !has_value_) {
      value_ = recompute();
      has_value_ = true;
      ++recompute_count_;
    }
    return value_;
  }

  void reset() { has_value_ = false; }
  int recompute_count() const { return recompute_count_; }

 private:
  int k_;
  Vec value_;
  bool has_value_ = false;
  int recompute_count_ = 0;
};

}  // namespace lanekeep
