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
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "igl/annotation.hpp"
#include "igl/types.hpp"

namespace igl {

/// Position on the Plutchik wheel; opposite emotions are four steps apart.
int wheel_position(Emotion e);

/// Minimal circular step count between two emotions, in [0, 4].
int wheel_distance(Emotion a, Emotion b);

enum class PeaMode { Best, Worst };

/// Similarity of one annotator pair's sets: max (Best) or min (Worst) over
/// all label pairings of 1 - distance/4. Two empty sets score 1, exactly one
/// empty set scores 0.
double pea_pair_score(EmotionSet a, EmotionSet b, PeaMode mode);

struct PeaResult {
  double score = 0.0;  // mean over every (tweet, annotator pair); 0 when no pairs
  std::size_t pairs = 0;
  std::size_t tweets = 0;
  std::size_t skipped_tweets = 0;  // fewer than two annotators
};

PeaResult pea_score(std::span<const AnnotationRecord> records, PeaMode mode);

/// Rows are items, columns categories; every row must sum to the same n >= 2.
/// Throws ValidationError on unequal rows and when chance agreement is 1.
double fleiss_kappa(const std::vector<std::vector<int>>& counts);

/// Per-tweet (absent, present) rater counts for one emotion over the tweets
/// that have the most common number of annotators.
std::vector<std::vector<int>> emotion_rating_matrix(std::span<const AnnotationRecord> records, Emotion e);

/// Spearman correlation with average ranks for ties; absent when either
/// vector is constant or shorter than 2.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

/// Mean over annotators of the rank correlation between each annotator's
/// binary judgments and the mean judgment of the other annotators on shared
/// tweets. Annotators with < 3 shared tweets or constant vectors are skipped;
/// absent when none remain.
std::optional<double> interrater_correlation(std::span<const AnnotationRecord> records, Emotion e);

struct AgreementReport {
  PeaResult pea_best;
  PeaResult pea_worst;
  std::optional<double> fleiss_kappa;  // mean of the defined per-emotion values
  std::array<std::optional<double>, kNumEmotions> fleiss_per_emotion{};
  std::array<std::optional<double>, kNumEmotions> interrater_corr{};
};

AgreementReport compute_agreement(std::span<const AnnotationRecord> records);

/// `modes`: which PEA variants to include ("best", "worst" or "all").
nlohmann::json to_json(const AgreementReport& r, std::string_view modes = "all");

}  // namespace igl
