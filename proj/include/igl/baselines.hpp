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
#include <memory>
#include <span>
#include <string_view>

#include "igl/features.hpp"
#include "igl/types.hpp"

namespace igl {

/// Always predicts the most frequent training label; a tie goes to InGroup.
struct MajorityClassifier {
  IGRLabel label = IGRLabel::InGroup;
  IGRLabel predict() const { return label; }
};

/// Throws ValidationError on empty input.
MajorityClassifier train_majority(std::span<const IGRLabel> train);

/// Coarse sentiment of an utterance.
class SentimentProvider {
 public:
  virtual ~SentimentProvider() = default;
  virtual Polarity polarity(std::string_view text) const = 0;
};

/// Sign of the summed lexicon polarity over the tokenized text.
class LexiconSentiment final : public SentimentProvider {
 public:
  explicit LexiconSentiment(SentimentLexicon lex) : lex_(std::move(lex)) {}
  Polarity polarity(std::string_view text) const override;
  const SentimentLexicon& lexicon() const { return lex_; }

 private:
  SentimentLexicon lex_;
};

/// Negative -> OutGroup, positive -> InGroup, neutral -> a fair coin drawn
/// from a generator seeded by (rng_seed, utterance id), so the label of an
/// utterance does not depend on evaluation order.
IGRLabel predict_sentiment_rule(std::string_view utterance_id, std::string_view text,
                                const SentimentProvider& sentiment, std::uint64_t rng_seed);

/// Default "emotion on" threshold for normalized lexicon scores.
inline constexpr double kEmoLexThreshold = 0.001;

/// Emotions whose normalized lexicon score reaches the threshold.
EmotionSet predict_emolex(std::span<const std::string> tokens, const EmotionLexicon& lexicon,
                          double threshold = kEmoLexThreshold);

}  // namespace igl
