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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "igl/annotation.hpp"
#include "igl/features.hpp"
#include "igl/nbsvm.hpp"
#include "igl/types.hpp"

namespace igl {

inline constexpr std::size_t kNoEmotionRow = kNumEmotions;

enum class IgrColumn : std::uint8_t { All, InGroup, OutGroup };

/// Percent of each column group whose aggregated set contains the row label
/// (multi-label examples count once per label). Row kNoEmotionRow counts
/// empty sets.
struct DistributionTable {
  std::array<std::array<double, 3>, kNumEmotions + 1> percent{};
  std::array<std::size_t, 3> group_size{};

  double cell(std::size_t row, IgrColumn col) const { return percent[row][static_cast<std::size_t>(col)]; }
};

/// Throws ValidationError on an empty dataset. An empty column group has all
/// cells at 0.
DistributionTable igr_emotion_distribution(std::span<const LabeledExample> dataset);

using CooccurrenceMatrix = std::array<std::array<std::size_t, kNumEmotions>, kNumEmotions>;

/// C[a][b] = examples whose set contains both a and b; the diagonal holds
/// per-label counts.
CooccurrenceMatrix cooccurrence_matrix(std::span<const LabeledExample> dataset);

struct TargetConcentration {
  std::optional<double> fraction;  // absent when no example carries the emotion
  std::vector<std::pair<std::string, std::size_t>> top;
  std::size_t emotion_total = 0;
};

/// Share of the emotion's examples aimed at the k most frequent targets of
/// that emotion (ties broken lexicographically by handle).
TargetConcentration target_concentration(std::span<const LabeledExample> dataset, Emotion emotion, std::size_t k);

struct TopFeatures {
  std::vector<std::pair<std::string, double>> outgroup;  // largest positive effective weights
  std::vector<std::pair<std::string, double>> ingroup;   // most negative effective weights
};

/// n > |V| is truncated. Ties are ordered by n-gram.
TopFeatures top_features(const LinearModel& model, const Vocab& vocab, std::size_t n);

struct AnalysisReport {
  std::size_t examples = 0;
  std::optional<DistributionTable> distribution;
  std::optional<CooccurrenceMatrix> cooccurrence;
  std::size_t topk = 3;
  std::array<TargetConcentration, kNumEmotions> concentration{};
  std::optional<TopFeatures> features;
  nlohmann::json evaluations = nlohmann::json::array();
};

/// Builds every section that the dataset supports; `model` adds top features.
AnalysisReport analyze_dataset(std::span<const LabeledExample> dataset, std::size_t topk,
                               const LinearModel* model = nullptr, const Vocab* vocab = nullptr,
                               std::size_t n_features = 10);

/// Percentages are written with one decimal. Labels whose row is all zero
/// are left out of the tables.
nlohmann::json to_json(const AnalysisReport& r);
std::string to_markdown(const AnalysisReport& r);
std::string distribution_csv(const AnalysisReport& r);
std::string cooccurrence_csv(const AnalysisReport& r);

/// Writes report.json, report.md, distribution.csv and cooccurrence.csv.
/// Throws IoError when out_dir is not writable.
void emit_report(const AnalysisReport& r, const std::filesystem::path& out_dir);

/// Rounds to one decimal, as printed in every table.
double round1(double v);

}  // namespace igl
