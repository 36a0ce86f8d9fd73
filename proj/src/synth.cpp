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

#include "igl/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "igl/errors.hpp"
#include "igl/io.hpp"
#include "igl/rng.hpp"

namespace igl {
namespace {

struct LexiconWord {
  const char* word;
  EmotionSet emotions;
  int polarity;  // 0 when the word carries no sentiment
};

using E = Emotion;

const std::vector<LexiconWord>& lexicon_words() {
  static const std::vector<LexiconWord> words = {
      {"happy", {E::Joy}, 1},          {"glad", {E::Joy}, 1},
      {"celebrate", {E::Joy}, 1},      {"delighted", {E::Joy}, 1},
      {"wonderful", {E::Joy}, 1},      {"congratulations", {E::Joy, E::Admiration}, 1},
      {"birthday", {E::Joy}, 1},       {"cheers", {E::Joy}, 1},
      {"champion", {E::Admiration}, 1}, {"leadership", {E::Admiration}, 1},
      {"honor", {E::Admiration}, 1},   {"respect", {E::Admiration}, 1},
      {"hero", {E::Admiration}, 1},    {"tireless", {E::Admiration}, 1},
      {"proud", {E::Admiration, E::Joy}, 1}, {"grateful", {E::Admiration}, 1},
      {"afraid", {E::Fear}, -1},       {"threat", {E::Fear}, -1},
      {"danger", {E::Fear}, -1},       {"worried", {E::Fear}, -1},
      {"alarming", {E::Fear, E::Surprise}, -1}, {"unexpected", {E::Surprise}, 0},
      {"shocking", {E::Surprise, E::Disgust}, -1}, {"sudden", {E::Surprise}, 0},
      {"astonished", {E::Surprise}, 0}, {"mourn", {E::Sadness}, -1},
      {"loss", {E::Sadness}, -1},      {"grief", {E::Sadness}, -1},
      {"condolences", {E::Sadness}, -1}, {"tragic", {E::Sadness, E::Fear}, -1},
      {"prayers", {E::Sadness}, 0},    {"heartbroken", {E::Sadness}, -1},
      {"disgraceful", {E::Disgust}, -1}, {"shameful", {E::Disgust}, -1},
      {"corrupt", {E::Disgust, E::Anger}, -1}, {"pathetic", {E::Disgust}, -1},
      {"appalling", {E::Disgust}, -1}, {"sleazy", {E::Disgust}, -1},
      {"outrageous", {E::Anger}, -1},  {"furious", {E::Anger}, -1},
      {"reckless", {E::Anger}, -1},    {"lies", {E::Anger, E::Disgust}, -1},
      {"unacceptable", {E::Anger}, -1}, {"betrayal", {E::Anger, E::Disgust}, -1},
      {"attack", {E::Anger, E::Fear}, -1}, {"discuss", {E::Interest}, 0},
      {"hearing", {E::Interest}, 0},   {"learn", {E::Interest}, 1},
      {"proposal", {E::Interest}, 0},  {"question", {E::Interest}, 0},
      {"explore", {E::Interest}, 1},   {"curious", {E::Interest}, 1},
      {"insight", {E::Interest}, 1},
  };
  return words;
}

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> words = {
      "today", "bill",    "vote",   "act",    "senate",  "house",   "committee", "district", "community",
      "families", "jobs", "workers", "meeting", "week",  "state",   "our",       "the",      "with",
      "for",   "on",      "about",  "new",    "plan",    "budget",  "floor",     "team",     "work",
      "this",  "and",     "to",     "at",     "veterans", "health", "care",      "local",    "nation"};
  return words;
}

// Rows follow Emotion order, then "no emotion"; columns all / in / out.
const std::array<std::array<double, 3>, kNumEmotions + 1> kReference = {{
    {26.7, 32.2, 21.4},  // joy
    {15.5, 22.2, 9.1},   // admiration
    {0.0, 0.0, 0.0},     // fear
    {0.0, 0.0, 0.0},     // surprise
    {2.5, 2.6, 2.4},     // sadness
    {7.4, 0.3, 14.2},    // disgust
    {8.2, 1.0, 15.1},    // anger
    {22.9, 27.2, 18.6},  // interest
    {16.8, 14.5, 19.1},  // no emotion
}};

std::size_t draw(const EmotionDistribution& p, Rng& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  return kNoEmotionOutcome;
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[uniform_index(rng, v.size())];
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::array<std::array<double, 3>, kNumEmotions + 1>& reference_proportions() { return kReference; }

SynthConfig SynthConfig::defaults() {
  SynthConfig c;
  for (std::size_t g = 0; g < 2; ++g) {
    double total = 0.0;
    for (std::size_t r = 0; r <= kNumEmotions; ++r) total += kReference[r][g + 1];
    for (std::size_t r = 0; r <= kNumEmotions; ++r) c.emotion_given_igr[g][r] = kReference[r][g + 1] / total;
  }
  return c;
}

void SynthConfig::validate() const {
  if (n_tweets == 0) throw ConfigError("synth: n must be >= 1");
  if (year_first > year_last) throw ConfigError("synth: year range is inverted");
  if (members_per_party < 4) throw ConfigError("synth: need at least 4 members per party");
  if (annotators_per_tweet < 2 || annotator_pool < annotators_per_tweet)
    throw ConfigError("synth: need >= 2 annotators per tweet and a pool at least that large");
  for (double p : {cooccurrence_prob, outgroup_cue_prob, ingroup_cue_prob, cue_leak_prob, noise_rate, flip_rate,
                   target_skew})
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("synth: probabilities must lie in [0, 1]");
  for (const auto& row : emotion_given_igr) {
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0)) throw ConfigError("synth: negative emotion probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("synth: emotion distribution does not sum to 1");
  }
}

SynthConfig load_synth_config(const std::filesystem::path& path) {
  SynthConfig c = SynthConfig::defaults();
  std::istringstream in(io::read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path.string(), lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    double v = 0.0;
    try {
      std::size_t pos = 0;
      v = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError(path.string(), lineno, "bad number '" + value + "'");
    }
    auto as_size = [&] { return static_cast<std::size_t>(std::llround(v)); };
    if (key == "n") c.n_tweets = as_size();
    else if (key == "year_first") c.year_first = static_cast<int>(v);
    else if (key == "year_last") c.year_last = static_cast<int>(v);
    else if (key == "members_per_party") c.members_per_party = as_size();
    else if (key == "annotator_pool") c.annotator_pool = as_size();
    else if (key == "annotators_per_tweet") c.annotators_per_tweet = as_size();
    else if (key == "cooccurrence_prob") c.cooccurrence_prob = v;
    else if (key == "outgroup_cue_prob") c.outgroup_cue_prob = v;
    else if (key == "ingroup_cue_prob") c.ingroup_cue_prob = v;
    else if (key == "cue_leak_prob") c.cue_leak_prob = v;
    else if (key == "noise_rate") c.noise_rate = v;
    else if (key == "flip_rate") c.flip_rate = v;
    else if (key == "target_skew") c.target_skew = v;
    else if (key == "seed") {
      const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), c.seed);
      if (ec != std::errc{} || end != value.data() + value.size())
        throw ParseError(path.string(), lineno, "seed must be a non-negative integer");
    }
    else if (key.starts_with("in.") || key.starts_with("out.")) {
      const std::size_t g = key.starts_with("in.") ? 0 : 1;
      const std::string label = key.substr(g == 0 ? 3 : 4);
      if (label == "none") {
        c.emotion_given_igr[g][kNoEmotionOutcome] = v;
      } else if (auto e = parse_emotion(label)) {
        c.emotion_given_igr[g][index_of(*e)] = v;
      } else {
        throw ParseError(path.string(), lineno, "unknown emotion '" + label + "'");
      }
    } else {
      throw ParseError(path.string(), lineno, "unknown key '" + key + "'");
    }
  }
  // Rows given in percent are rescaled so that either unit works.
  for (auto& row : c.emotion_given_igr) {
    double sum = 0.0;
    for (double p : row) sum += p;
    if (sum > 1.5)
      for (double& p : row) p /= 100.0;
  }
  return c;
}

const EmotionLexicon& bundled_emotion_lexicon() {
  static const EmotionLexicon lex = [] {
    EmotionLexicon l;
    for (const auto& w : lexicon_words())
      for (Emotion e : w.emotions.members()) l.add(w.word, e);
    return l;
  }();
  return lex;
}

const SentimentLexicon& bundled_sentiment_lexicon() {
  static const SentimentLexicon lex = [] {
    SentimentLexicon l;
    for (const auto& w : lexicon_words())
      if (w.polarity != 0) l.add(w.word, w.polarity);
    return l;
  }();
  return lex;
}

SynthCorpus generate_corpus(const SynthConfig& config) {
  config.validate();
  SynthCorpus out;
  out.lexicon = bundled_emotion_lexicon();
  out.sentiment = bundled_sentiment_lexicon();

  // Members: dem01.., rep01..; the first three of each party are the
  // prominent targets used by target_skew.
  std::array<std::vector<std::string>, 2> by_party;
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::size_t i = 1; i <= config.members_per_party; ++i) {
      char handle[32];
      std::snprintf(handle, sizeof handle, "%s%02zu", p == 0 ? "dem" : "rep", i);
      Member m;
      m.handle = handle;
      m.party = p == 0 ? Party::Democrat : Party::Republican;
      m.active_years = {config.year_first, config.year_last};
      out.members.add(m);
      by_party[p].push_back(handle);
    }
  }

  std::array<std::vector<std::string>, kNumEmotions> words_for;
  std::vector<std::string> all_words;
  for (const auto& w : lexicon_words()) {
    all_words.emplace_back(w.word);
    for (Emotion e : w.emotions.members()) words_for[index_of(e)].emplace_back(w.word);
  }
  std::vector<std::string> annotators;
  for (std::size_t a = 1; a <= config.annotator_pool; ++a) {
    char id[16];
    std::snprintf(id, sizeof id, "ann%02zu", a);
    annotators.emplace_back(id);
  }
  const auto years = static_cast<std::uint64_t>(config.year_last - config.year_first + 1);

  for (std::size_t t = 0; t < config.n_tweets; ++t) {
    Rng rng(mix_seed(config.seed, t));
    const IGRLabel igr = (rng() >> 63) != 0 ? IGRLabel::OutGroup : IGRLabel::InGroup;
    const auto& dist = config.emotion_given_igr[static_cast<std::size_t>(igr)];

    EmotionSet gold;
    const std::size_t first = draw(dist, rng);
    if (first != kNoEmotionOutcome) {
      gold.insert(kAllEmotions[first]);
      if (uniform01(rng) < config.cooccurrence_prob) {
        EmotionDistribution rest = dist;
        rest[kNoEmotionOutcome] = 0.0;
        rest[first] = 0.0;
        double mass = 0.0;
        for (double p : rest) mass += p;
        if (mass > 0) {
          for (double& p : rest) p /= mass;
          const std::size_t second = draw(rest, rng);
          if (second != kNoEmotionOutcome) gold.insert(kAllEmotions[second]);
        }
      }
    }

    const std::size_t speaker_party = uniform_index(rng, 2);
    const std::size_t target_party = igr == IGRLabel::InGroup ? speaker_party : 1 - speaker_party;
    const std::string speaker = pick(by_party[speaker_party], rng);
    std::vector<std::string> candidates;
    const bool skewed = (gold.contains(Emotion::Anger) || gold.contains(Emotion::Disgust)) &&
                        uniform01(rng) < config.target_skew;
    for (std::size_t i = 0; i < by_party[target_party].size(); ++i) {
      if (skewed && i >= 3) break;
      if (by_party[target_party][i] != speaker) candidates.push_back(by_party[target_party][i]);
    }
    const std::string target = pick(candidates, rng);

    std::vector<std::string> words;
    const std::size_t n_filler = 4 + uniform_index(rng, 5);
    for (std::size_t i = 0; i < n_filler; ++i) words.push_back(pick(filler_words(), rng));
    for (Emotion e : gold.members()) {
      const std::size_t n_cue = 1 + uniform_index(rng, 2);
      for (std::size_t i = 0; i < n_cue; ++i) words.push_back(pick(words_for[index_of(e)], rng));
    }
    if (uniform01(rng) < config.noise_rate) words.push_back(pick(all_words, rng));
    const bool out_cue = igr == IGRLabel::OutGroup ? uniform01(rng) < config.outgroup_cue_prob
                                                   : uniform01(rng) < config.cue_leak_prob;
    const bool in_cue = igr == IGRLabel::InGroup ? uniform01(rng) < config.ingroup_cue_prob
                                                 : uniform01(rng) < config.cue_leak_prob;
    if (out_cue) words.emplace_back(kOutGroupCue);
    if (in_cue) words.emplace_back(kInGroupCue);
    std::shuffle(words.begin(), words.end(), rng);
    const std::size_t at = uniform_index(rng, words.size() + 1);
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), "@" + target);

    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    if (uniform01(rng) < 0.5) text += (uniform01(rng) < 0.5) ? "!" : ".";

    char id[24];
    std::snprintf(id, sizeof id, "t%06zu", t + 1);
    RawTweet tw;
    tw.id = id;
    tw.speaker_handle = speaker;
    tw.text = std::move(text);
    tw.mentions = {target};
    tw.year = config.year_first + static_cast<int>(uniform_index(rng, years));
    out.tweets.push_back(tw);
    out.gold.push_back({tw.id, igr, gold});

    std::vector<std::string> pool = annotators;
    for (std::size_t a = 0; a < config.annotators_per_tweet; ++a) {
      std::swap(pool[a], pool[a + uniform_index(rng, pool.size() - a)]);
      EmotionSet noisy = gold;
      for (Emotion e : kAllEmotions)
        if (uniform01(rng) < config.flip_rate) noisy.set(e, !noisy.contains(e));
      out.annotations.push_back({tw.id, pool[a], noisy});
    }
  }
  return out;
}

void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& out_dir) {
  std::string tweets, annotations, gold;
  for (const auto& t : corpus.tweets) tweets += io::dump_line(to_json(t)) + "\n";
  for (const auto& a : corpus.annotations) annotations += io::dump_line(to_json(a)) + "\n";
  for (const auto& g : corpus.gold)
    gold += io::dump_line({{"id", g.tweet_id}, {"igr", to_string(g.igr)}, {"emotions", emotion_names(g.emotions)}}) +
            "\n";
  io::write_file(out_dir / "members.tsv", format_member_directory(corpus.members));
  io::write_file(out_dir / "tweets.jsonl", tweets);
  io::write_file(out_dir / "annotations.jsonl", annotations);
  io::write_file(out_dir / "gold.jsonl", gold);
  io::write_file(out_dir / "lexicon.tsv", format_emotion_lexicon(corpus.lexicon));
  io::write_file(out_dir / "sentiment.tsv", format_sentiment_lexicon(corpus.sentiment));
}

}  // namespace igl
