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

#include "igl/baselines.hpp"

#include "igl/errors.hpp"
#include "igl/rng.hpp"

namespace igl {

MajorityClassifier train_majority(std::span<const IGRLabel> train) {
  if (train.empty()) throw ValidationError("train_majority needs at least one example");
  std::size_t out = 0;
  for (IGRLabel l : train) out += l == IGRLabel::OutGroup;
  return {out > train.size() - out ? IGRLabel::OutGroup : IGRLabel::InGroup};
}

Polarity LexiconSentiment::polarity(std::string_view text) const { return lex_.classify(tokenize(text)); }

IGRLabel predict_sentiment_rule(std::string_view utterance_id, std::string_view text,
                                const SentimentProvider& sentiment, std::uint64_t rng_seed) {
  switch (sentiment.polarity(text)) {
    case Polarity::Negative: return IGRLabel::OutGroup;
    case Polarity::Positive: return IGRLabel::InGroup;
    case Polarity::Neutral: break;
  }
  Rng rng(mix_seed(rng_seed, fnv1a(utterance_id)));
  return (rng() >> 63) != 0 ? IGRLabel::OutGroup : IGRLabel::InGroup;
}

EmotionSet predict_emolex(std::span<const std::string> tokens, const EmotionLexicon& lexicon, double threshold) {
  if (!(threshold > 0)) throw ConfigError("emolex threshold must be > 0");
  const auto scores = lexicon_scores(tokens, lexicon);
  EmotionSet out;
  for (Emotion e : kAllEmotions)
    if (scores[index_of(e)] >= threshold) out.insert(e);
  return out;
}

}  // namespace igl
