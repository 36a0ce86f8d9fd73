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
#include <string>
#include <vector>

#include "igl/annotation.hpp"
#include "igl/corpus.hpp"
#include "igl/features.hpp"

namespace igl {

/// Index of the "no emotion" outcome in an emotion distribution row.
inline constexpr std::size_t kNoEmotionOutcome = kNumEmotions;
using EmotionDistribution = std::array<double, kNumEmotions + 1>;

struct SynthConfig {
  std::size_t n_tweets = 3000;
  int year_first = 2010;
  int year_last = 2021;
  std::size_t members_per_party = 20;
  std::size_t annotator_pool = 9;
  std::size_t annotators_per_tweet = 3;
  /// P(outcome | IGR), rows indexed by IGRLabel; each row sums to 1.
  std::array<EmotionDistribution, 2> emotion_given_igr{};
  /// Chance that a drawn emotion gets a second label drawn from the same row.
  /// Non-zero values add co-occurrence but inflate the per-label marginals.
  double cooccurrence_prob = 0.0;
  double outgroup_cue_prob = 0.3;  // "bipartisan" in out-group tweets
  double ingroup_cue_prob = 0.3;   // "my colleague" in in-group tweets
  double cue_leak_prob = 0.05;     // either cue in a tweet of the other class
  double noise_rate = 0.15;        // chance of one unrelated emotion word
  double flip_rate = 0.05;         // per-label annotator flip probability
  double target_skew = 0.6;        // share of anger/disgust aimed at the 3 prominent members
  std::uint64_t seed = 0;

  /// Emotion rows from reference_proportions() (fear and surprise at zero;
  /// the out-group row is renormalized from its rounded total of 99.9).
  static SynthConfig defaults();
  /// Throws ConfigError on an invalid field or a distribution row that does
  /// not sum to 1 within 1e-9.
  void validate() const;
};

/// Reads flat `key = value` lines over the defaults. Emotion rows use keys
/// such as `in.anger` or `out.none` (in percent or probability, normalized
/// only by validate()).
SynthConfig load_synth_config(const std::filesystem::path& path);

struct GoldLabel {
  std::string tweet_id;
  IGRLabel igr = IGRLabel::InGroup;
  EmotionSet emotions;
};

struct SynthCorpus {
  MemberDirectory members;
  std::vector<RawTweet> tweets;
  std::vector<AnnotationRecord> annotations;
  std::vector<GoldLabel> gold;
  EmotionLexicon lexicon;
  SentimentLexicon sentiment;
};

SynthCorpus generate_corpus(const SynthConfig& config);

/// members.tsv, tweets.jsonl, annotations.jsonl, gold.jsonl, lexicon.tsv,
/// sentiment.tsv.
void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& out_dir);

/// Lexicon shipped with the generator: word -> emotions in EmoLex layout.
const EmotionLexicon& bundled_emotion_lexicon();
/// Polarity lexicon derived from the same words.
const SentimentLexicon& bundled_sentiment_lexicon();

inline constexpr std::string_view kOutGroupCue = "bipartisan";
inline constexpr std::string_view kInGroupCue = "my colleague";

/// Reference proportions (percent) used for the defaults, rows in Emotion
/// order plus "no emotion", columns all / in-group / out-group.
const std::array<std::array<double, 3>, kNumEmotions + 1>& reference_proportions();

}  // namespace igl
