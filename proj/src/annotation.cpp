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

#include "igl/annotation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "igl/errors.hpp"
#include "igl/io.hpp"
#include "igl/rng.hpp"

namespace igl {

nlohmann::json to_json(const AnnotationRecord& r) {
  return {{"tweet_id", r.tweet_id}, {"annotator_id", r.annotator_id}, {"emotions", emotion_names(r.emotions)}};
}

AnnotationRecord annotation_from_json(const nlohmann::json& j) {
  AnnotationRecord r;
  r.tweet_id = j.at("tweet_id").get<std::string>();
  r.annotator_id = j.at("annotator_id").get<std::string>();
  r.emotions = emotion_set_from_names(j.at("emotions").get<std::vector<std::string>>());
  return r;
}

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
  std::vector<AnnotationRecord> out;
  std::set<std::pair<std::string, std::string>> seen;
  io::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) {
    AnnotationRecord r = annotation_from_json(j);
    if (!seen.emplace(r.tweet_id, r.annotator_id).second)
      throw ValidationError("duplicate annotation by '" + r.annotator_id + "' for tweet '" + r.tweet_id + "'");
    out.push_back(std::move(r));
  });
  return out;
}

EmotionSet aggregate_labels(std::span<const AnnotationRecord> records) {
  std::set<std::string_view> annotators;
  for (const auto& r : records) {
    if (r.tweet_id != records.front().tweet_id)
      throw ValidationError("aggregate_labels called with records from several tweets");
    annotators.insert(r.annotator_id);
  }
  if (annotators.size() < 2) throw ValidationError("aggregation needs at least 2 distinct annotators");

  std::array<int, kNumEmotions> votes{};
  for (const auto& r : records)
    for (Emotion e : kAllEmotions) votes[index_of(e)] += r.emotions.contains(e) ? 1 : 0;
  EmotionSet out;
  for (Emotion e : kAllEmotions)
    if (votes[index_of(e)] >= kMajorityVotes) out.insert(e);
  return out;
}

std::vector<std::vector<AnnotationRecord>> group_by_tweet(std::span<const AnnotationRecord> records) {
  std::vector<std::vector<AnnotationRecord>> groups;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, inserted] = slot.try_emplace(r.tweet_id, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(r);
  }
  return groups;
}

nlohmann::json to_json(const LabeledExample& e) {
  nlohmann::json j = to_json(e.utterance);
  j["emotions"] = emotion_names(e.emotions);
  return j;
}

LabeledExample example_from_json(const nlohmann::json& j) {
  LabeledExample e;
  e.utterance = utterance_from_json(j);
  e.emotions = emotion_set_from_names(j.at("emotions").get<std::vector<std::string>>());
  e.igr = e.utterance.igr;
  return e;
}

std::vector<LabeledExample> load_examples(const std::filesystem::path& path) {
  std::vector<LabeledExample> out;
  io::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) { out.push_back(example_from_json(j)); });
  return out;
}

std::string format_examples(std::span<const LabeledExample> examples) {
  std::string out;
  for (const auto& e : examples) out += io::dump_line(to_json(e)) + "\n";
  return out;
}

ExampleBuild build_examples(std::span<const Utterance> utterances, std::span<const AnnotationRecord> records) {
  std::unordered_map<std::string, std::vector<AnnotationRecord>> by_tweet;
  for (const auto& r : records) by_tweet[r.tweet_id].push_back(r);

  ExampleBuild out;
  for (const Utterance& u : utterances) {
    auto it = by_tweet.find(u.id);
    std::set<std::string_view> annotators;
    if (it != by_tweet.end())
      for (const auto& r : it->second) annotators.insert(r.annotator_id);
    if (annotators.size() < 2) {
      ++out.missing_annotations;
      continue;
    }
    out.examples.push_back({u, aggregate_labels(it->second), u.igr});
  }
  return out;
}

DatasetSplit split_dataset(std::vector<LabeledExample> examples, SplitRatios ratios, std::uint64_t seed) {
  if (ratios.train < 0 || ratios.dev < 0 || ratios.test < 0 ||
      std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9)
    throw ConfigError("split ratios must be non-negative and sum to 1");
  if (examples.size() < 10) throw ValidationError("split_dataset needs at least 10 examples");

  Rng rng(seed);
  std::shuffle(examples.begin(), examples.end(), rng);
  const auto n = static_cast<double>(examples.size());
  // The epsilon keeps exact products such as 0.8 * 10 from flooring down.
  const auto n_train = static_cast<std::size_t>(std::floor(ratios.train * n + 1e-9));
  const auto n_dev = static_cast<std::size_t>(std::floor(ratios.dev * n + 1e-9));

  DatasetSplit split;
  auto first = std::make_move_iterator(examples.begin());
  split.train.assign(first, first + static_cast<std::ptrdiff_t>(n_train));
  split.dev.assign(first + static_cast<std::ptrdiff_t>(n_train),
                   first + static_cast<std::ptrdiff_t>(n_train + n_dev));
  split.test.assign(first + static_cast<std::ptrdiff_t>(n_train + n_dev), std::make_move_iterator(examples.end()));
  return split;
}

EmotionCountTable emotion_count_table(const DatasetSplit& split) {
  EmotionCountTable t;
  const std::array<const std::vector<LabeledExample>*, 3> parts = {&split.train, &split.dev, &split.test};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& ex : *parts[p]) {
      if (ex.emotions.empty()) ++t.no_emotion[p];
      for (Emotion e : ex.emotions.members()) ++t.emotion[index_of(e)][p];
    }
  }
  return t;
}

}  // namespace igl
