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

#include "igl/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <sstream>

#include "igl/errors.hpp"
#include "igl/io.hpp"
#include "igl/rng.hpp"

namespace igl {
namespace {

bool is_ascii_punct(unsigned char c) { return c < 128 && std::ispunct(c) != 0; }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename Fn>
void for_each_tsv_row(std::istream& in, const std::string& source, Fn fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fn(split_tabs(line), lineno);
  }
  (void)source;
}

}  // namespace

Tokens tokenize(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view word = text.substr(i, j - i);
    i = j;

    while (!word.empty() && word.front() != '@' && word.front() != '#' &&
           is_ascii_punct(static_cast<unsigned char>(word.front())))
      word.remove_prefix(1);
    while (!word.empty() && is_ascii_punct(static_cast<unsigned char>(word.back()))) word.remove_suffix(1);
    if (!word.empty()) out.push_back(lower(word));
  }
  return out;
}

std::vector<std::string> ngrams(std::span<const std::string> tokens) {
  std::vector<std::string> out(tokens.begin(), tokens.end());
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) out.push_back(tokens[i] + " " + tokens[i + 1]);
  return out;
}

Vocab Vocab::fit(std::span<const Tokens> corpus, std::size_t max_size, std::size_t min_count) {
  std::unordered_map<std::string, std::size_t> freq;
  for (const Tokens& doc : corpus)
    for (auto& g : ngrams(doc)) ++freq[std::move(g)];

  std::vector<std::pair<std::string, std::size_t>> ranked;
  for (auto& [g, c] : freq)
    if (c >= min_count) ranked.emplace_back(g, c);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > max_size) ranked.resize(max_size);

  std::vector<std::string> entries;
  entries.reserve(ranked.size());
  for (auto& [g, c] : ranked) entries.push_back(std::move(g));
  return from_entries(std::move(entries));
}

Vocab Vocab::from_entries(std::vector<std::string> entries) {
  Vocab v;
  v.entries_ = std::move(entries);
  for (std::uint32_t i = 0; i < v.entries_.size(); ++i) {
    if (!v.index_.emplace(v.entries_[i], i).second)
      throw ValidationError("duplicate vocabulary entry '" + v.entries_[i] + "'");
  }
  return v;
}

std::optional<std::uint32_t> Vocab::find(std::string_view ngram) const {
  auto it = index_.find(std::string(ngram));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Vocab::hash() const {
  std::uint64_t h = fnv1a("vocab");
  for (const auto& e : entries_) {
    h = fnv1a(e, h);
    h = fnv1a(std::string_view("\n", 1), h);
  }
  return h;
}

double SparseVector::dot(std::span<const double> dense) const {
  double s = 0.0;
  for (auto [i, v] : entries) s += dense[i] * v;
  return s;
}

SparseVector vectorize(std::span<const std::string> tokens, const Vocab& vocab, bool binarize) {
  std::map<std::uint32_t, double> counts;
  for (const auto& g : ngrams(tokens))
    if (auto idx = vocab.find(g)) counts[*idx] += 1.0;
  SparseVector v;
  v.entries.reserve(counts.size());
  for (auto [i, c] : counts) v.entries.emplace_back(i, binarize ? 1.0 : c);
  return v;
}

NBRatios nb_log_count_ratios(std::span<const SparseVector> vectors, std::span<const bool> positive,
                             std::size_t dim, double alpha) {
  if (vectors.size() != positive.size()) throw ValidationError("nb_log_count_ratios: label count mismatch");
  if (!(alpha > 0)) throw ConfigError("nb smoothing alpha must be > 0");
  const bool has_pos = std::find(positive.begin(), positive.end(), true) != positive.end();
  const bool has_neg = std::find(positive.begin(), positive.end(), false) != positive.end();
  if (!has_pos || !has_neg) throw ValidationError("nb_log_count_ratios needs both classes");

  std::vector<double> p(dim, alpha), q(dim, alpha);
  for (std::size_t d = 0; d < vectors.size(); ++d) {
    auto& acc = positive[d] ? p : q;
    for (auto [i, v] : vectors[d].entries) {
      if (i >= dim) throw ValidationError("nb_log_count_ratios: feature index out of range");
      acc[i] += v;
    }
  }
  double p_norm = 0.0, q_norm = 0.0;
  for (std::size_t i = 0; i < dim; ++i) p_norm += p[i], q_norm += q[i];

  NBRatios out;
  out.alpha = alpha;
  out.r.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.r[i] = std::log(p[i] / p_norm) - std::log(q[i] / q_norm);
  return out;
}

void EmotionLexicon::add(std::string_view word, Emotion e) { entries_[lower(word)].insert(e); }

const EmotionSet* EmotionLexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

EmotionLexicon parse_emotion_lexicon(std::istream& in, const std::string& source) {
  EmotionLexicon lex;
  for_each_tsv_row(in, source, [&](const std::vector<std::string>& cols, std::size_t lineno) {
    if (cols.size() != 3) throw ParseError(source, lineno, "expected word<TAB>emotion<TAB>flag");
    if (cols[2] != "0" && cols[2] != "1") throw ParseError(source, lineno, "flag must be 0 or 1");
    const std::string label = lower(cols[1]);
    if (label == "positive" || label == "negative" || label == "anticipation" || label == "trust") return;
    auto e = parse_emotion(label);
    if (!e) throw ParseError(source, lineno, "unknown emotion '" + cols[1] + "'");
    if (cols[2] == "1") lex.add(cols[0], *e);
  });
  return lex;
}

EmotionLexicon load_emotion_lexicon(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  return parse_emotion_lexicon(in, path.string());
}

std::string format_emotion_lexicon(const EmotionLexicon& lex) {
  std::string out;
  for (const auto& [word, set] : lex.entries())
    for (Emotion e : set.members()) out += word + "\t" + std::string(to_string(e)) + "\t1\n";
  return out;
}

std::array<double, kNumEmotions> lexicon_scores(std::span<const std::string> tokens, const EmotionLexicon& lex) {
  std::array<double, kNumEmotions> hits{};
  for (const auto& t : tokens)
    if (const EmotionSet* s = lex.find(t))
      for (Emotion e : s->members()) hits[index_of(e)] += 1.0;
  const double denom = std::max<double>(1.0, static_cast<double>(tokens.size()));
  for (double& h : hits) h /= denom;
  return hits;
}

void SentimentLexicon::add(std::string_view word, int polarity) {
  if (polarity != 1 && polarity != -1) throw ValidationError("sentiment polarity must be +1 or -1");
  entries_[lower(word)] = polarity;
}

std::optional<int> SentimentLexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Polarity SentimentLexicon::classify(std::span<const std::string> tokens) const {
  int sum = 0;
  for (const auto& t : tokens)
    if (auto p = find(t)) sum += *p;
  return sum > 0 ? Polarity::Positive : sum < 0 ? Polarity::Negative : Polarity::Neutral;
}

SentimentLexicon parse_sentiment_lexicon(std::istream& in, const std::string& source) {
  SentimentLexicon lex;
  for_each_tsv_row(in, source, [&](const std::vector<std::string>& cols, std::size_t lineno) {
    if (cols.size() != 2) throw ParseError(source, lineno, "expected word<TAB>polarity");
    if (cols[1] == "+1" || cols[1] == "1")
      lex.add(cols[0], 1);
    else if (cols[1] == "-1")
      lex.add(cols[0], -1);
    else
      throw ParseError(source, lineno, "polarity must be +1 or -1");
  });
  return lex;
}

SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  return parse_sentiment_lexicon(in, path.string());
}

std::string format_sentiment_lexicon(const SentimentLexicon& lex) {
  std::string out;
  for (const auto& [word, p] : lex.entries()) out += word + "\t" + (p > 0 ? "+1" : "-1") + "\n";
  return out;
}

}  // namespace igl
