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

#include "igl/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "igl/errors.hpp"

namespace igl {

int wheel_position(Emotion e) {
  switch (e) {
    case Emotion::Joy: return 0;
    case Emotion::Admiration: return 1;
    case Emotion::Fear: return 2;
    case Emotion::Surprise: return 3;
    case Emotion::Sadness: return 4;
    case Emotion::Disgust: return 5;
    case Emotion::Anger: return 6;
    case Emotion::Interest: return 7;
  }
  return 0;
}

int wheel_distance(Emotion a, Emotion b) {
  const int d = std::abs(wheel_position(a) - wheel_position(b));
  return std::min(d, 8 - d);
}

double pea_pair_score(EmotionSet a, EmotionSet b, PeaMode mode) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  double best = 0.0;
  double worst = 1.0;
  for (Emotion x : a.members()) {
    for (Emotion y : b.members()) {
      const double s = 1.0 - wheel_distance(x, y) / 4.0;
      best = std::max(best, s);
      worst = std::min(worst, s);
    }
  }
  return mode == PeaMode::Best ? best : worst;
}

PeaResult pea_score(std::span<const AnnotationRecord> records, PeaMode mode) {
  PeaResult out;
  double sum = 0.0;
  for (const auto& group : group_by_tweet(records)) {
    if (group.size() < 2) {
      ++out.skipped_tweets;
      continue;
    }
    ++out.tweets;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        sum += pea_pair_score(group[i].emotions, group[j].emotions, mode);
        ++out.pairs;
      }
    }
  }
  out.score = out.pairs == 0 ? 0.0 : sum / static_cast<double>(out.pairs);
  return out;
}

double fleiss_kappa(const std::vector<std::vector<int>>& counts) {
  if (counts.empty()) throw ValidationError("fleiss_kappa needs at least one item");
  const std::size_t k = counts.front().size();
  const int n = std::accumulate(counts.front().begin(), counts.front().end(), 0);
  if (n < 2) throw ValidationError("fleiss_kappa needs at least 2 raters per item");

  std::vector<double> category_totals(k, 0.0);
  double p_bar = 0.0;
  for (const auto& row : counts) {
    if (row.size() != k) throw ValidationError("fleiss_kappa rows have different category counts");
    if (std::accumulate(row.begin(), row.end(), 0) != n)
      throw ValidationError("fleiss_kappa rows have unequal rater counts");
    double agree = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] < 0) throw ValidationError("fleiss_kappa counts must be non-negative");
      category_totals[j] += row[j];
      agree += static_cast<double>(row[j]) * (row[j] - 1);
    }
    p_bar += agree / (static_cast<double>(n) * (n - 1));
  }
  const auto items = static_cast<double>(counts.size());
  p_bar /= items;
  double p_e = 0.0;
  for (double t : category_totals) {
    const double p = t / (items * n);
    p_e += p * p;
  }
  if (std::abs(1.0 - p_e) < 1e-15) throw ValidationError("fleiss_kappa undefined: chance agreement is 1");
  return (p_bar - p_e) / (1.0 - p_e);
}

std::vector<std::vector<int>> emotion_rating_matrix(std::span<const AnnotationRecord> records, Emotion e) {
  const auto groups = group_by_tweet(records);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& g : groups) ++sizes[g.size()];
  std::size_t modal = 0, modal_count = 0;
  for (auto [size, count] : sizes)
    if (count > modal_count) modal = size, modal_count = count;

  std::vector<std::vector<int>> rows;
  if (modal < 2) return rows;
  for (const auto& g : groups) {
    if (g.size() != modal) continue;
    int on = 0;
    for (const auto& r : g) on += r.emotions.contains(e) ? 1 : 0;
    rows.push_back({static_cast<int>(modal) - on, on});
  }
  return rows;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("spearman: length mismatch");
  if (x.size() < 2) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx <= 0 || syy <= 0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> interrater_correlation(std::span<const AnnotationRecord> records, Emotion e) {
  const auto groups = group_by_tweet(records);
  std::set<std::string> annotators;
  for (const auto& r : records) annotators.insert(r.annotator_id);

  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& a : annotators) {
    std::vector<double> own, others;
    for (const auto& g : groups) {
      const AnnotationRecord* mine = nullptr;
      double other_sum = 0.0;
      std::size_t other_n = 0;
      for (const auto& r : g) {
        if (r.annotator_id == a) {
          mine = &r;
        } else {
          other_sum += r.emotions.contains(e) ? 1.0 : 0.0;
          ++other_n;
        }
      }
      if (mine == nullptr || other_n == 0) continue;
      own.push_back(mine->emotions.contains(e) ? 1.0 : 0.0);
      others.push_back(other_sum / static_cast<double>(other_n));
    }
    if (own.size() < 3) continue;
    if (auto rho = spearman(own, others)) {
      sum += *rho;
      ++defined;
    }
  }
  if (defined == 0) return std::nullopt;
  return sum / static_cast<double>(defined);
}

AgreementReport compute_agreement(std::span<const AnnotationRecord> records) {
  AgreementReport r;
  r.pea_best = pea_score(records, PeaMode::Best);
  r.pea_worst = pea_score(records, PeaMode::Worst);
  double kappa_sum = 0.0;
  std::size_t kappa_n = 0;
  for (Emotion e : kAllEmotions) {
    const auto rows = emotion_rating_matrix(records, e);
    if (!rows.empty()) {
      try {
        r.fleiss_per_emotion[index_of(e)] = fleiss_kappa(rows);
        kappa_sum += *r.fleiss_per_emotion[index_of(e)];
        ++kappa_n;
      } catch (const ValidationError&) {
        // Undefined for labels nobody (or everybody) used.
      }
    }
    r.interrater_corr[index_of(e)] = interrater_correlation(records, e);
  }
  if (kappa_n > 0) r.fleiss_kappa = kappa_sum / static_cast<double>(kappa_n);
  return r;
}

nlohmann::json to_json(const AgreementReport& r, std::string_view modes) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  auto pea = [](const PeaResult& p) {
    return nlohmann::json{{"score", p.score}, {"pairs", p.pairs}, {"tweets", p.tweets}, {"skipped_tweets", p.skipped_tweets}};
  };
  nlohmann::json j;
  if (modes == "best" || modes == "all") j["pea_max"] = pea(r.pea_best);
  if (modes == "worst" || modes == "all") j["pea_min"] = pea(r.pea_worst);
  j["fleiss_kappa"] = opt(r.fleiss_kappa);
  nlohmann::json per = nlohmann::json::object();
  nlohmann::json corr = nlohmann::json::object();
  for (Emotion e : kAllEmotions) {
    per[std::string(to_string(e))] = opt(r.fleiss_per_emotion[index_of(e)]);
    corr[std::string(to_string(e))] = opt(r.interrater_corr[index_of(e)]);
  }
  j["fleiss_kappa_per_emotion"] = per;
  j["interrater_correlation"] = corr;
  return j;
}

}  // namespace igl
