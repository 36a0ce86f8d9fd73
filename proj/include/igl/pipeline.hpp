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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "igl/annotation.hpp"
#include "igl/eval.hpp"
#include "igl/model_io.hpp"
#include "igl/multitask.hpp"
#include "igl/nbsvm.hpp"

namespace igl {

namespace fs = std::filesystem;

/// Tweets + members -> utterances.jsonl (optionally year-balanced).
struct IngestOptions {
  fs::path tweets;
  fs::path members;
  fs::path out;
  std::optional<int> per_year;
  std::uint64_t seed = 0;
  std::string placeholder{kTrainingPlaceholder};
};
nlohmann::json run_ingest(const IngestOptions& opt);

/// Annotations + utterances -> all/train/dev/test.jsonl and counts.json in `out`.
struct AggregateOptions {
  fs::path annotations;
  fs::path utterances;
  fs::path out;
  std::uint64_t seed = 0;
};
nlohmann::json run_aggregate(const AggregateOptions& opt);

struct TrainOptions {
  TaskMode task = TaskMode::IGROnly;
  ModelKind model = ModelKind::Majority;
  fs::path train;
  fs::path dev;
  fs::path out;
  std::uint64_t seed = 0;
  std::optional<fs::path> lexicon;            // emolex
  std::optional<fs::path> sentiment_lexicon;  // sentrule
  std::size_t vocab_size = 20000;
  std::size_t min_count = 2;
  bool binarize = true;
  double emolex_threshold = kEmoLexThreshold;
  NbsvmConfig nbsvm;
  std::optional<TrainConfig> network;  // defaults_for(task) when absent
  unsigned jobs = 1;
};

/// Fits the requested model; throws ValidationError on an unsupported
/// (task, model) pair.
SavedModel train_model(const TrainOptions& opt, std::span<const LabeledExample> train,
                       std::span<const LabeledExample> dev);
nlohmann::json run_train(const TrainOptions& opt);

struct EvaluateOptions {
  fs::path model;
  fs::path test;
  std::optional<fs::path> compare;
  std::size_t bootstrap = 10000;
  std::uint64_t seed = 0;
  BootstrapVariant variant = BootstrapVariant::CountNonPositive;
  unsigned jobs = 1;
  fs::path out;
};

/// Per-label scores for every restart, restart mean/SD, a breakdown by gold
/// IGR, and (with `compare`) paired bootstrap p-values of model vs compare
/// on the first restart of each.
nlohmann::json evaluate_model(const SavedModel& model, std::span<const LabeledExample> test,
                              const SavedModel* compare, std::size_t bootstrap, std::uint64_t seed,
                              BootstrapVariant variant = BootstrapVariant::CountNonPositive, unsigned jobs = 1);
nlohmann::json run_evaluate(const EvaluateOptions& opt);

struct AnalyzeOptions {
  fs::path data;
  std::optional<fs::path> model;
  std::size_t topk = 3;
  std::size_t n_features = 10;
  fs::path out;
};
nlohmann::json run_analyze(const AnalyzeOptions& opt);

}  // namespace igl
