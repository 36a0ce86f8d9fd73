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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "igl/types.hpp"

namespace igl {

using Tokens = std::vector<std::string>;

/// Lowercases, splits on whitespace and strips surrounding punctuation. A
/// leading '@' or '#' is kept, so "@USER" becomes "@user".
Tokens tokenize(std::string_view text);

/// Unigrams followed by adjacent bigrams joined with a single space.
std::vector<std::string> ngrams(std::span<const std::string> tokens);

/// Unigram and bigram vocabulary with dense indices in rank order.
class Vocab {
 public:
  Vocab() = default;

  /// Ranks n-grams by corpus frequency (descending), then lexicographically,
  /// drops those below min_count, and keeps the first max_size.
  static Vocab fit(std::span<const Tokens> corpus, std::size_t max_size = 20000, std::size_t min_count = 2);
  static Vocab from_entries(std::vector<std::string> entries);

  std::optional<std::uint32_t> find(std::string_view ngram) const;
  const std::string& ngram(std::uint32_t index) const { return entries_.at(index); }
  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// FNV-1a over the entries in index order.
  std::uint64_t hash() const;

 private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Sorted (index, value) pairs; indices strictly increase, no zero values.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  double dot(std::span<const double> dense) const;
  bool operator==(const SparseVector&) const = default;
};

SparseVector vectorize(std::span<const std::string> tokens, const Vocab& vocab, bool binarize);

struct NBRatios {
  std::vector<double> r;
  double alpha = 1.0;
};

/// r_i = log((p_i / |p|_1) / (q_i / |q|_1)) with p = alpha + sum of positive
/// vectors and q = alpha + sum of negative vectors. `positive[i]` marks the
/// class of vectors[i]. Throws ValidationError unless both classes occur.
NBRatios nb_log_count_ratios(std::span<const SparseVector> vectors, std::span<const bool> positive,
                             std::size_t dim, double alpha = 1.0);

/// word -> emotions, as in EmoLex. Words are lowercase.
class EmotionLexicon {
 public:
  void add(std::string_view word, Emotion e);
  const EmotionSet* find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, EmotionSet, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, EmotionSet, std::less<>> entries_;
};

/// TSV word, emotion, flag(0|1). Rows naming the EmoLex sentiment columns
/// ("positive", "negative") or the emotions outside the eight ("anticipation",
/// "trust") are skipped; words left with no emotion are dropped.
EmotionLexicon parse_emotion_lexicon(std::istream& in, const std::string& source = "<stream>");
EmotionLexicon load_emotion_lexicon(const std::filesystem::path& path);
std::string format_emotion_lexicon(const EmotionLexicon& lex);

/// score(e) = #tokens whose entry contains e / max(1, #tokens).
std::array<double, kNumEmotions> lexicon_scores(std::span<const std::string> tokens, const EmotionLexicon& lex);

enum class Polarity : std::int8_t { Negative = -1, Neutral = 0, Positive = 1 };

/// word -> +1 / -1.
class SentimentLexicon {
 public:
  void add(std::string_view word, int polarity);
  std::optional<int> find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, int, std::less<>>& entries() const { return entries_; }
  /// Sign of the summed polarity of the tokens.
  Polarity classify(std::span<const std::string> tokens) const;

 private:
  std::map<std::string, int, std::less<>> entries_;
};

SentimentLexicon parse_sentiment_lexicon(std::istream& in, const std::string& source = "<stream>");
SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path);
std::string format_sentiment_lexicon(const SentimentLexicon& lex);

}  // namespace igl
