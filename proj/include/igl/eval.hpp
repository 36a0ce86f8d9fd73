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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include <json.hpp>

#include "igl/errors.hpp"
#include "igl/rng.hpp"
#include "igl/types.hpp"

namespace igl {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold positives
};

/// Zero denominators yield 0 for the affected ratio.
PRF prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn);

PRF prf_binary(std::span<const IGRLabel> preds, std::span<const IGRLabel> golds, IGRLabel positive);

/// Unweighted mean of the in-group and out-group F1.
double igr_macro_f1(std::span<const IGRLabel> preds, std::span<const IGRLabel> golds);

/// Per-label scores. A label is absent when it has no gold and no predicted
/// positives.
struct EmotionPRF {
  std::array<std::optional<PRF>, kNumEmotions> per_emotion{};
  std::optional<PRF> no_emotion;
};

EmotionPRF prf_per_emotion(std::span<const EmotionSet> preds, std::span<const EmotionSet> golds);

/// Mean F1 over the emotions that are present (NoEmotion excluded); 0 when none are.
double emotion_macro_f1(const EmotionPRF& prf);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // population (denominator n)
};

MeanSd aggregate_restarts(std::span<const double> values);

enum class BootstrapVariant {
  CountNonPositive,  // p = #{resampled delta <= 0} / B
  ShiftedDelta,      // p = #{resampled delta > 2 * observed delta} / B
};

inline constexpr std::size_t kMinBootstrapResamples = 1000;

struct BootstrapResult {
  double delta = 0.0;  // metric(a) - metric(b) on the full set
  double p_value = 1.0;
  std::size_t resamples = 0;
  bool orientation_violated = false;  // delta <= 0: "a better than b" is not what was observed
};

/// One-sided paired bootstrap of "a is better than b". Resample i draws its
/// indices from a generator seeded with mix_seed(seed, i), so the result does
/// not depend on `jobs`.
template <typename Label, typename Metric>
BootstrapResult paired_bootstrap(std::span<const Label> preds_a, std::span<const Label> preds_b,
                                 std::span<const Label> golds, Metric metric, std::size_t resamples,
                                 std::uint64_t seed, BootstrapVariant variant = BootstrapVariant::CountNonPositive,
                                 unsigned jobs = 1) {
  if (preds_a.size() != golds.size() || preds_b.size() != golds.size())
    throw ValidationError("paired_bootstrap: length mismatch");
  if (golds.empty()) throw ValidationError("paired_bootstrap: empty evaluation set");
  if (resamples < kMinBootstrapResamples) throw ConfigError("paired_bootstrap needs at least 1000 resamples");

  BootstrapResult out;
  out.resamples = resamples;
  out.delta = metric(preds_a, golds) - metric(preds_b, golds);
  out.orientation_violated = out.delta <= 0.0;

  const std::size_t n = golds.size();
  auto count_range = [&](std::size_t begin, std::size_t end) {
    std::vector<Label> ra(n), rb(n), rg(n);
    std::size_t hits = 0;
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng(mix_seed(seed, r));
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = uniform_index(rng, n);
        ra[k] = preds_a[idx];
        rb[k] = preds_b[idx];
        rg[k] = golds[idx];
      }
      const double d = metric(std::span<const Label>(ra), std::span<const Label>(rg)) -
                       metric(std::span<const Label>(rb), std::span<const Label>(rg));
      if (variant == BootstrapVariant::CountNonPositive ? d <= 0.0 : d > 2.0 * out.delta) ++hits;
    }
    return hits;
  };

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(resamples)));
  std::vector<std::size_t> partial(jobs, 0);
  if (jobs == 1) {
    partial[0] = count_range(0, resamples);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::size_t begin = resamples * j / jobs, end = resamples * (j + 1) / jobs;
      threads.emplace_back([&, j, begin, end] { partial[j] = count_range(begin, end); });
    }
    for (auto& t : threads) t.join();
  }
  std::size_t hits = 0;
  for (std::size_t h : partial) hits += h;
  out.p_value = static_cast<double>(hits) / static_cast<double>(resamples);
  return out;
}

nlohmann::json to_json(const PRF& p);
nlohmann::json to_json(const EmotionPRF& p);
nlohmann::json to_json(const MeanSd& m);
nlohmann::json to_json(const BootstrapResult& b);

}  // namespace igl
