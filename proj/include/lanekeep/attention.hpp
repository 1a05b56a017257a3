// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lanekeep/types.hpp"

namespace lanekeep {

// Row-wise softmax; each output row sums to one.
inline Mat softmax_rows(const Mat& logits) {
  Mat out(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double m = logits.row(i).maxCoeff();
    out.row(i) = (logits.row(i).array() - m).exp();
    out.row(i) /= out.row(i).sum();
  }
  return out;
}

struct AttentionWeights {
  Mat w_q;  // d x d
  Mat w_k;  // d x d
  Mat w_v;  // d x d
};

struct LoraFactors {
  Mat a_q;  // r x d
  Mat b_q;  // d x r, zero at init
  Mat a_k;  // r x d
  Mat b_k;  // d x r, zero at init
};

// Self-attention with a low-rank correction on the query/key projections:
// the effective projection is W + B A, so zero B factors reduce exactly to
// vanilla attention.
inline Mat lora_attention(const Mat& x, const AttentionWeights& w,
                          const LoraFactors& lora, bool use_lora) {
  if (!x.allFinite()) throw std::invalid_argument("non-finite attention input");
  const double d_k = static_cast<double>(x.cols());
  Mat q = x * w.w_q;
  Mat k = x * w.w_k;
  if (use_lora) {
    q += (x * lora.b_q) * lora.a_q;
    k += (x * lora.b_k) * lora.a_k;
  }
  const Mat scores = (q * k.transpose()) / std::sqrt(d_k);
  return softmax_rows(scores) * (x * w.w_v);
}

// Cross-attention: queries from `q_in`, keys/values from `context`.
inline Mat cross_attention(const Mat& q_in, const Mat& context,
                           const AttentionWeights& w) {
  if (!q_in.allFinite() || !context.allFinite()) {
    throw std::invalid_argument("non-finite attention input");
  }
  const double d_k = static_cast<double>(q_in.cols());
  const Mat scores = ((q_in * w.w_q) * (context * w.w_k).transpose()) / std::sqrt(d_k);
  return softmax_rows(scores) * (context * w.w_v);
}

}  // namespace lanekeep
