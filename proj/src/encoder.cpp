// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/encoder.hpp"

#include <stdexcept>

#include "lanekeep/rng.hpp"

namespace lanekeep {

namespace {

Mat seeded_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rng.gaussian(0.0, scale);
    }
  }
  return m;
}

}  // namespace

EncoderWeights EncoderWeights::init(const EncoderConfig& cfg, int vocab_size) {
  if (cfg.rank >= cfg.dim) throw std::invalid_argument("LoRA rank must be < dim");
  EncoderWeights w;
  w.cfg = cfg;
  Rng rng(Rng::derive_seed(cfg.seed, 0x5e));
  const double s = 0.25;
  w.token_embedding = seeded_matrix(rng, vocab_size, cfg.dim, s);
  w.attn.w_q = seeded_matrix(rng, cfg.dim, cfg.dim, s);
  w.attn.w_k = seeded_matrix(rng, cfg.dim, cfg.dim, s);
  w.attn.w_v = seeded_matrix(rng, cfg.dim, cfg.dim, s);
  w.lora.a_q = seeded_matrix(rng, cfg.rank, cfg.dim, s);
  w.lora.b_q = Mat::Zero(cfg.dim, cfg.rank);
  w.lora.a_k = seeded_matrix(rng, cfg.rank, cfg.dim, s);
  w.lora.b_k = Mat::Zero(cfg.dim, cfg.rank);
  w.q_learned = seeded_matrix(rng, cfg.queries, cfg.dim, s);
  w.patch_proj = seeded_matrix(rng, cfg.patch * cfg.patch, cfg.dim, s * 0.25);
  w.patch_bias = seeded_matrix(rng, cfg.dim, 1, s).col(0);
  w.out_proj = seeded_matrix(rng, cfg.dim, cfg.dim, s);
  return w;
}

Mat encode_image_features(const LaneRaster& raster, const EncoderWeights& w) {
  const int patch = w.cfg.patch;
  const int h = raster.height();
  const int width = raster.width();
  if (h % patch != 0 || width % patch != 0) {
    throw std::invalid_argument("raster dimensions must be divisible by the patch size");
  }
  const int ph = h / patch;
  const int pw = width / patch;
  Mat patches(ph * pw, patch * patch);
  for (int pi = 0; pi < ph; ++pi) {
    for (int pj = 0; pj < pw; ++pj) {
      Eigen::Index row = pi * pw + pj;
      for (int dy = 0; dy < patch; ++dy) {
        for (int dx = 0; dx < patch; ++dx) {
          patches(row, dy * patch + dx) = raster.pixels(pi * patch + dy, pj * patch + dx);
        }
      }
    }
  }
  Mat features = patches * w.patch_proj;
  features.rowwise() += w.patch_bias.transpose();
  return features;
}

SemanticEmbedding encode_semantics(const Caption& caption, const LaneRaster& raster,
                                   const EncoderWeights& w, const EncodeOptions& opts) {
  // Refine the learned queries, attend them over the image features, run the
  // caption tokens through the same low-rank-adapted self-attention, then
  // pool everything into one fixed-width vector.
  const Mat q_refined = lora_attention(w.q_learned, w.attn, w.lora, opts.use_lora);
  Mat v_img;
  if (opts.zero_image_branch) {
    v_img = Mat::Zero(w.cfg.queries, w.cfg.dim);
  } else {
    const Mat img_features = encode_image_features(raster, w);
    v_img = cross_attention(q_refined, img_features, w.attn);
  }

  Mat tokens(static_cast<Eigen::Index>(caption.token_ids.size()), w.cfg.dim);
  for (std::size_t i = 0; i < caption.token_ids.size(); ++i) {
    const int id = caption.token_ids[i];
    if (id < 0 || id >= w.token_embedding.rows()) {
      throw std::invalid_argument("token id outside the embedding table");
    }
    tokens.row(static_cast<Eigen::Index>(i)) = w.token_embedding.row(id);
  }
  const Mat t_txt = lora_attention(tokens, w.attn, w.lora, opts.use_lora);

  Vec pooled = Vec::Zero(w.cfg.dim);
  for (Eigen::Index i = 0; i < t_txt.rows(); ++i) pooled += t_txt.row(i).transpose();
  for (Eigen::Index i = 0; i < v_img.rows(); ++i) pooled += v_img.row(i).transpose();
  pooled /= static_cast<double>(t_txt.rows() + v_img.rows());

  SemanticEmbedding out;
  out.e = w.out_proj * pooled;
  return out;
}

}  // namespace lanekeep
