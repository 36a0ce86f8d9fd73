// Copyright 2026 The intergroup-lens Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "igl/annotation.hpp"
#include "igl/baselines.hpp"
#include "igl/features.hpp"
#include "igl/multitask.hpp"
#include "igl/nbsvm.hpp"

namespace igl {

enum class ModelKind : std::uint8_t { Majority, SentimentRule, EmoLex, NbSvm, Mlp };

std::string_view to_string(ModelKind k);
std::optional<ModelKind> parse_model_kind(std::string_view s);

/// Everything needed to predict without the training inputs.
struct SavedModel {
  ModelKind kind = ModelKind::Majority;
  TaskMode task = TaskMode::IGROnly;
  std::uint64_t seed = 0;
  Vocab vocab;  // NbSvm and Mlp
  bool binarize = true;
  MajorityClassifier majority;
  SentimentLexicon sentiment;
  EmotionLexicon emotion_lexicon;
  double emolex_threshold = kEmoLexThreshold;
  LinearModel linear;
  NbsvmConfig nbsvm;
  std::vector<MultitaskModel> restarts;

  bool predicts_igr() const { return task != TaskMode::EmotionOnly; }
  bool predicts_emotions() const { return task != TaskMode::IGROnly; }
};

inline constexpr std::uint32_t kModelFormatVersion = 1;

/// "IGLM", a little-endian format version, then a CBOR document holding the
/// vocabulary hash, configuration and parameters.
void save_model(const SavedModel& model, const std::filesystem::path& path);
std::vector<std::uint8_t> serialize_model(const SavedModel& model);

/// Throws ValidationError on a bad magic, an unknown version, or a
/// vocabulary whose hash differs from the stored one.
SavedModel load_model(const std::filesystem::path& path);
SavedModel deserialize_model(std::span<const std::uint8_t> bytes);

struct Predictions {
  std::vector<IGRLabel> igr;         // empty unless predicts_igr()
  std::vector<EmotionSet> emotions;  // empty unless predicts_emotions()
};

/// One entry per restart (a single entry for non-network models).
std::vector<Predictions> predict_all(const SavedModel& model, std::span<const LabeledExample> examples);

}  // namespace igl
