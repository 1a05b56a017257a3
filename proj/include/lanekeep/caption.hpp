// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lanekeep/scene.hpp"

namespace lanekeep {

struct Caption {
  std::string text;
  std::vector<int> token_ids;  // padded / truncated to the fixed length

  bool operator==(const Caption&) const = default;
};

// Closed-vocabulary tokenizer over the caption template grammar.
// Id 0 is padding; a comma is its own token so captions round-trip exactly.
class Tokenizer {
 public:
  explicit Tokenizer(int max_len = 16);

  std::vector<int> tokenize(const std::string& text) const;
  std::string detokenize(const std::vector<int>& ids) const;
  int vocab_size() const { return static_cast<int>(words_.size()); }
  int max_len() const { return max_len_; }
  std::string vocab_json() const;

 private:
  std::vector<std::string> words_;
  int max_len_;
};

std::string caption_text(const SceneDescriptor& desc);
Caption caption_from_scene(const SceneDescriptor& desc, const Tokenizer& tok);

}  // namespace lanekeep
