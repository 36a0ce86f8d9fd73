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

#include <filesystem>
#include <random>
#include <string>

#include "igl/annotation.hpp"
#include "igl/corpus.hpp"
#include "igl/synth.hpp"

namespace igl::test {

inline LabeledExample make_example(std::string id, IGRLabel igr, EmotionSet emotions, std::string text = "hello @USER",
                                   std::string target = "dem01") {
  LabeledExample e;
  e.utterance.id = std::move(id);
  e.utterance.masked_text = std::move(text);
  e.utterance.speaker_party = Party::Democrat;
  e.utterance.target_party = igr == IGRLabel::InGroup ? Party::Democrat : Party::Republican;
  e.utterance.target_handle = std::move(target);
  e.utterance.igr = igr;
  e.utterance.year = 2015;
  e.igr = igr;
  e.emotions = emotions;
  return e;
}

// Runs the ingest and aggregation steps in memory over a generated corpus.
inline std::vector<LabeledExample> synth_examples(const SynthConfig& config) {
  const SynthCorpus corpus = generate_corpus(config);
  const auto filtered = filter_interpersonal(corpus.tweets, corpus.members);
  const auto utterances = build_utterances(filtered, corpus.members).utterances;
  return build_examples(utterances, corpus.annotations).examples;
}

inline std::vector<LabeledExample> synth_examples(std::size_t n, std::uint64_t seed) {
  SynthConfig config = SynthConfig::defaults();
  config.n_tweets = n;
  config.seed = seed;
  return synth_examples(config);
}

// Fresh scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("igl-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace igl::test
