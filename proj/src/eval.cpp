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

#include "igl/eval.hpp"

#include <cmath>

namespace igl {

PRF prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  PRF p;
  p.support = tp + fn;
  p.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  p.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  p.f1 = p.precision + p.recall > 0 ? 2 * p.precision * p.recall / (p.precision + p.recall) : 0.0;
  return p;
}

PRF prf_binary(std::span<const IGRLabel> preds, std::span<const IGRLabel> golds, IGRLabel positive) {
  if (preds.size() != golds.size()) throw ValidationError("prf_binary: length mismatch");
  if (preds.empty()) throw ValidationError("prf_binary: empty input");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const bool p = preds[i] == positive, g = golds[i] == positive;
    tp += p && g;
    fp += p && !g;
    fn += !p && g;
  }
  return prf_from_counts(tp, fp, fn);
}

double igr_macro_f1(std::span<const IGRLabel> preds, std::span<const IGRLabel> golds) {
  return 0.5 * (prf_binary(preds, golds, IGRLabel::InGroup).f1 + prf_binary(preds, golds, IGRLabel::OutGroup).f1);
}

EmotionPRF prf_per_emotion(std::span<const EmotionSet> preds, std::span<const EmotionSet> golds) {
  if (preds.size() != golds.size()) throw ValidationError("prf_per_emotion: length mismatch");
  std::array<std::size_t, kNumEmotions + 1> tp{}, fp{}, fn{};
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (Emotion e : kAllEmotions) {
      const bool p = preds[i].contains(e), g = golds[i].contains(e);
      const std::size_t k = index_of(e);
      tp[k] += p && g;
      fp[k] += p && !g;
      fn[k] += !p && g;
    }
    const bool p = preds[i].empty(), g = golds[i].empty();
    tp[kNumEmotions] += p && g;
    fp[kNumEmotions] += p && !g;
    fn[kNumEmotions] += !p && g;
  }
  EmotionPRF out;
  for (std::size_t k = 0; k <= kNumEmotions; ++k) {
    if (tp[k] + fp[k] + fn[k] == 0) continue;
    const PRF prf = prf_from_counts(tp[k], fp[k], fn[k]);
    if (k == kNumEmotions)
      out.no_emotion = prf;
    else
      out.per_emotion[k] = prf;
  }
  return out;
}

double emotion_macro_f1(const EmotionPRF& prf) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& p : prf.per_emotion) {
    if (!p) continue;
    sum += p->f1;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

MeanSd aggregate_restarts(std::span<const double> values) {
  if (values.empty()) throw ValidationError("aggregate_restarts needs at least one value");
  MeanSd out;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(values.size()));
  return out;
}

nlohmann::json to_json(const PRF& p) {
  return {{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}, {"support", p.support}};
}

nlohmann::json to_json(const EmotionPRF& p) {
  nlohmann::json j = nlohmann::json::object();
  for (Emotion e : kAllEmotions) {
    const auto& v = p.per_emotion[index_of(e)];
    j[std::string(to_string(e))] = v ? to_json(*v) : nlohmann::json(nullptr);
  }
  j["no_emotion"] = p.no_emotion ? to_json(*p.no_emotion) : nlohmann::json(nullptr);
  j["macro_f1"] = emotion_macro_f1(p);
  return j;
}

nlohmann::json to_json(const MeanSd& m) { return {{"mean", m.mean}, {"sd", m.sd}}; }

nlohmann::json to_json(const BootstrapResult& b) {
  return {{"delta", b.delta},
          {"p_value", b.p_value},
          {"resamples", b.resamples},
          {"orientation_violated", b.orientation_violated}};
}

}  // namespace igl
