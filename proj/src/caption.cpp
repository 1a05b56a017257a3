// SPDX-License-Identifier: Apache-2.0
#include "lanekeep/caption.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lanekeep {

namespace {

const std::vector<std::string>& grammar_words() {
  static const std::vector<std::string> words = {
      "<pad>",  ",",        "straight", "road",  "with",  "lane",
      "markings", "no",     "obstacles", "gently", "curved", "to",
      "the",    "left",     "right",    "sharp", "obstacle", "near",
      "at",     "mid",      "distance", "far",   "ahead",  "without"};
  return words;
}

}  // namespace

Tokenizer::Tokenizer(int max_len) : words_(grammar_words()), max_len_(max_len) {}

std::vector<int> Tokenizer::tokenize(const std::string& text) const {
  std::vector<int> ids;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    const auto it = std::find(words_.begin(), words_.end(), word);
    if (it == words_.end()) {
      throw std::invalid_argument("word outside caption grammar: " + word);
    }
    ids.push_back(static_cast<int>(it - words_.begin()));
    word.clear();
  };
  for (char c : text) {
    if (c == ' ') {
      flush();
    } else if (c == ',') {
      flush();
      ids.push_back(1);
    } else {
      word.push_back(c);
    }
  }
  flush();
  ids.resize(static_cast<std::size_t>(max_len_), 0);
  return ids;
}

std::string Tokenizer::detokenize(const std::vector<int>& ids) const {
  std::string out;
  for (int id : ids) {
    if (id == 0) break;
    const std::string& word = words_.at(static_cast<std::size_t>(id));
    if (word == ",") {
      out += ",";
    } else {
      if (!out.empty()) out += " ";
      out += word;
    }
  }
  return out;
}

std::string Tokenizer::vocab_json() const {
  nlohmann::json j;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    j[words_[i]] = i;
  }
  return j.dump(2);
}

std::string caption_text(const SceneDescriptor& d) {
  std::string text;
  switch (d.curvature_class) {
    case CurvatureClass::kStraight:
      text = "straight road";
      break;
    case CurvatureClass::kGentleCurve:
      text = "gently curved road to the ";
      text += d.curve_direction == CurveDirection::kLeft ? "left" : "right";
      break;
    case CurvatureClass::kSharpCurve:
      text = "sharp curved road to the ";
      text += d.curve_direction == CurveDirection::kLeft ? "left" : "right";
      break;
  }
  if (d.obstacle_ahead) {
    switch (d.obstacle_distance_class) {
      case ObstacleDistanceClass::kNear:
        text += " with obstacle near";
        break;
      case ObstacleDistanceClass::kMid:
        text += " with obstacle at mid distance";
        break;
      default:
        text += " with obstacle far ahead";
        break;
    }
  } else {
    text += d.lane_marking_visible ? " with lane markings, no obstacles"
                                   : " without lane markings, no obstacles";
  }
  return text;
}

Caption caption_from_scene(const SceneDescriptor& desc, const Tokenizer& tok) {
  Caption c;
  c.text = caption_text(desc);
  c.token_ids = tok.tokenize(c.text);
  return c;
}

}  // namespace lanekeep
