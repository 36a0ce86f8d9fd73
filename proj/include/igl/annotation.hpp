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

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "igl/corpus.hpp"
#include "igl/types.hpp"

namespace igl {

/// An emotion is kept when at least this many annotators chose it. The
/// threshold is absolute, so it stays at 2 for tweets with more annotators.
inline constexpr int kMajorityVotes = 2;

struct AnnotationRecord {
  std::string tweet_id;
  std::string annotator_id;
  EmotionSet emotions;
};

nlohmann::json to_json(const AnnotationRecord& r);
AnnotationRecord annotation_from_json(const nlohmann::json& j);
/// Throws ParseError on malformed lines, unknown emotions, or a repeated
/// (tweet_id, annotator_id) pair.
std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);

/// Records for one tweet, from at least two distinct annotators.
EmotionSet aggregate_labels(std::span<const AnnotationRecord> records);

/// Records grouped by tweet id, in order of first appearance.
std::vector<std::vector<AnnotationRecord>> group_by_tweet(std::span<const AnnotationRecord> records);

struct LabeledExample {
  Utterance utterance;
  EmotionSet emotions;
  IGRLabel igr = IGRLabel::InGroup;
};

nlohmann::json to_json(const LabeledExample& e);
LabeledExample example_from_json(const nlohmann::json& j);
std::vector<LabeledExample> load_examples(const std::filesystem::path& path);
std::string format_examples(std::span<const LabeledExample> examples);

struct ExampleBuild {
  std::vector<LabeledExample> examples;
  std::size_t missing_annotations = 0;  // utterances with < 2 annotators
};

/// Joins utterances with their aggregated annotations, preserving utterance order.
ExampleBuild build_examples(std::span<const Utterance> utterances, std::span<const AnnotationRecord> records);

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct DatasetSplit {
  std::vector<LabeledExample> train;
  std::vector<LabeledExample> dev;
  std::vector<LabeledExample> test;
};

/// Seeded uniform shuffle, then floor(train*n) / floor(dev*n) / remainder.
DatasetSplit split_dataset(std::vector<LabeledExample> examples, SplitRatios ratios, std::uint64_t seed);

enum class Partition : std::uint8_t { Train, Dev, Test };

struct EmotionCountTable {
  std::array<std::array<std::size_t, 3>, kNumEmotions> emotion{};  // [emotion][partition]
  std::array<std::size_t, 3> no_emotion{};
};

EmotionCountTable emotion_count_table(const DatasetSplit& split);

}  // namespace igl
