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

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "igl/agreement.hpp"
#include "igl/errors.hpp"

using namespace igl;

namespace {

EmotionSet random_set(std::mt19937_64& rng, double p_empty = 0.2) {
  if (std::uniform_real_distribution<double>(0, 1)(rng) < p_empty) return {};
  EmotionSet s;
  const int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) s.insert(kAllEmotions[rng() % 8]);
  return s;
}

// Independent Spearman: ranks by counting (smaller + half the ties), then Pearson.
double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double less = 0, equal = 0;
      for (double w : v) {
        less += w < v[i] ? 1 : 0;
        equal += w == v[i] ? 1 : 0;
      }
      r[i] = less + (equal + 1) / 2.0;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) mx += rx[i] / n, my += ry[i] / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("wheel distance") {
  CHECK(wheel_distance(Emotion::Joy, Emotion::Joy) == 0);
  CHECK(wheel_distance(Emotion::Admiration, Emotion::Disgust) == 4);
  CHECK(wheel_distance(Emotion::Anger, Emotion::Disgust) == 1);
  CHECK(wheel_distance(Emotion::Joy, Emotion::Sadness) == 4);
  CHECK(wheel_distance(Emotion::Interest, Emotion::Joy) == 1);
}

TEST_CASE("wheel distance is a metric over all triples") {
  for (Emotion a : kAllEmotions) {
    for (Emotion b : kAllEmotions) {
      const int d = wheel_distance(a, b);
      CHECK(d >= 0);
      CHECK(d <= 4);
      CHECK(d == wheel_distance(b, a));
      CHECK((d == 0) == (a == b));
      for (Emotion c : kAllEmotions) CHECK(wheel_distance(a, c) <= d + wheel_distance(b, c));
    }
  }
}

TEST_CASE("PEA pair score") {
  const EmotionSet adm{Emotion::Admiration}, dis{Emotion::Disgust};
  CHECK(pea_pair_score(adm, dis, PeaMode::Best) == 0.0);
  CHECK(pea_pair_score(adm, dis, PeaMode::Worst) == 0.0);
  CHECK(pea_pair_score({}, {}, PeaMode::Best) == 1.0);
  CHECK(pea_pair_score({}, adm, PeaMode::Worst) == 0.0);
  const EmotionSet ja{Emotion::Joy, Emotion::Anger};
  // Joy-Joy 1.0, Anger-Joy distance 2 -> 0.5.
  CHECK(pea_pair_score(ja, EmotionSet{Emotion::Joy}, PeaMode::Best) == 1.0);
  CHECK(pea_pair_score(ja, EmotionSet{Emotion::Joy}, PeaMode::Worst) == 0.5);
}

TEST_CASE("PEA score of identical annotations is 1") {
  std::vector<AnnotationRecord> rs;
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const EmotionSet s = random_set(rng);
    for (int a = 0; a < 3; ++a) rs.push_back({"t" + std::to_string(t), "a" + std::to_string(a), s});
  }
  CHECK(pea_score(rs, PeaMode::Best).score == 1.0);
}

TEST_CASE("PEA on a random instance matches a double-loop oracle") {
  std::mt19937_64 rng(17);
  std::vector<AnnotationRecord> rs;
  std::vector<std::vector<EmotionSet>> by_tweet(50);
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int a = 0; a < k; ++a) {
      const EmotionSet s = random_set(rng);
      by_tweet[static_cast<std::size_t>(t)].push_back(s);
      rs.push_back({"t" + std::to_string(t), "a" + std::to_string(a), s});
    }
  }
  // Oracle scoring from positions directly, over ordered pairs i<j.
  auto pos = [](Emotion e) {
    static const std::map<Emotion, int> p{{Emotion::Joy, 0},     {Emotion::Admiration, 1}, {Emotion::Fear, 2},
                                          {Emotion::Surprise, 3}, {Emotion::Sadness, 4},    {Emotion::Disgust, 5},
                                          {Emotion::Anger, 6},   {Emotion::Interest, 7}};
    return p.at(e);
  };
  for (PeaMode mode : {PeaMode::Best, PeaMode::Worst}) {
    double sum = 0;
    int pairs = 0;
    for (const auto& sets : by_tweet) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
          double s;
          if (sets[i].empty() || sets[j].empty()) {
            s = sets[i].empty() && sets[j].empty() ? 1.0 : 0.0;
          } else {
            s = mode == PeaMode::Best ? -1.0 : 2.0;
            for (Emotion x : kAllEmotions) {
              if (!sets[i].contains(x)) continue;
              for (Emotion y : kAllEmotions) {
                if (!sets[j].contains(y)) continue;
                const int d = std::abs(pos(x) - pos(y));
                const double v = 1.0 - std::min(d, 8 - d) / 4.0;
                s = mode == PeaMode::Best ? std::max(s, v) : std::min(s, v);
              }
            }
          }
          sum += s;
          ++pairs;
        }
      }
    }
    const auto got = pea_score(rs, mode);
    CHECK(got.pairs == static_cast<std::size_t>(pairs));
    CHECK(got.score == doctest::Approx(sum / pairs).epsilon(1e-12));
  }
  CHECK(pea_score(rs, PeaMode::Best).score >= pea_score(rs, PeaMode::Worst).score);
}

TEST_CASE("PEA skips tweets with a single annotator") {
  std::vector<AnnotationRecord> rs{{"a", "1", {Emotion::Joy}}, {"b", "1", {}}, {"b", "2", {}}};
  const auto r = pea_score(rs, PeaMode::Best);
  CHECK(r.skipped_tweets == 1);
  CHECK(r.tweets == 1);
  CHECK(r.score == 1.0);
}

TEST_CASE("Fleiss kappa hand-computed instance") {
  // 10 items, 14 raters, 5 categories. By hand: P-bar = 0.378022,
  // P-e = 0.212755, kappa = 0.209931.
  const std::vector<std::vector<int>> m{{0, 0, 0, 0, 14}, {0, 2, 6, 4, 2}, {0, 0, 3, 5, 6}, {0, 3, 9, 2, 0},
                                        {2, 2, 8, 1, 1},  {7, 7, 0, 0, 0}, {3, 2, 6, 3, 0}, {2, 5, 3, 2, 2},
                                        {6, 5, 2, 1, 0},  {0, 2, 2, 3, 7}};
  CHECK(fleiss_kappa(m) == doctest::Approx(0.209931).epsilon(1e-5));
}

TEST_CASE("Fleiss kappa edge cases") {
  CHECK(fleiss_kappa({{3, 0}, {0, 3}, {3, 0}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fleiss_kappa({{3, 0}, {3, 0}}), ValidationError);
  CHECK_THROWS_AS(fleiss_kappa({{3, 0}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(fleiss_kappa({}), ValidationError);
}

TEST_CASE("Fleiss kappa of random raters is near zero") {
  std::mt19937_64 rng(123);
  std::vector<std::vector<int>> m;
  for (int i = 0; i < 10000; ++i) {
    int on = 0;
    for (int r = 0; r < 3; ++r) on += static_cast<int>(rng() & 1U);
    m.push_back({3 - on, on});
  }
  CHECK(std::abs(fleiss_kappa(m)) < 0.05);
}

TEST_CASE("rating matrix keeps tweets with the modal annotator count") {
  std::vector<AnnotationRecord> rs{{"a", "1", {Emotion::Joy}}, {"a", "2", {Emotion::Joy}}, {"a", "3", {}},
                                   {"b", "1", {}},             {"b", "2", {}},             {"b", "3", {}},
                                   {"c", "1", {Emotion::Joy}}, {"c", "2", {}}};
  const auto m = emotion_rating_matrix(rs, Emotion::Joy);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<int>{1, 2});
  CHECK(m[1] == std::vector<int>{3, 0});
}

TEST_CASE("spearman") {
  std::vector<double> x{1, 2, 3, 4}, y{10, 20, 30, 40}, z{4, 3, 2, 1};
  CHECK(*spearman(x, y) == doctest::Approx(1.0));
  CHECK(*spearman(x, z) == doctest::Approx(-1.0));
  std::vector<double> c{1, 1, 1, 1};
  CHECK_FALSE(spearman(x, c).has_value());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> a, b;
    for (int i = 0; i < 12; ++i) {
      a.push_back(static_cast<double>(rng() % 4));
      b.push_back(static_cast<double>(rng() % 5));
    }
    const auto got = spearman(a, b);
    if (got) CHECK(*got == doctest::Approx(oracle_spearman(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("interrater correlation") {
  std::vector<AnnotationRecord> same, inverted;
  for (int t = 0; t < 10; ++t) {
    const bool on = t % 3 == 0;
    const EmotionSet s = on ? EmotionSet{Emotion::Anger} : EmotionSet{};
    const EmotionSet ns = on ? EmotionSet{} : EmotionSet{Emotion::Anger};
    for (int a = 0; a < 3; ++a) same.push_back({"t" + std::to_string(t), "a" + std::to_string(a), s});
    inverted.push_back({"t" + std::to_string(t), "a", s});
    inverted.push_back({"t" + std::to_string(t), "b", ns});
  }
  CHECK(*interrater_correlation(same, Emotion::Anger) == doctest::Approx(1.0));
  CHECK(*interrater_correlation(inverted, Emotion::Anger) == doctest::Approx(-1.0));
  CHECK_FALSE(interrater_correlation(same, Emotion::Joy).has_value());
}

TEST_CASE("interrater correlation matches a rank oracle on random labels") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<AnnotationRecord> rs;
    std::array<std::vector<double>, 3> v;
    for (int t = 0; t < 10; ++t) {
      for (int a = 0; a < 3; ++a) {
        const bool on = (rng() & 1U) != 0;
        v[static_cast<std::size_t>(a)].push_back(on ? 1.0 : 0.0);
        rs.push_back({"t" + std::to_string(t), "a" + std::to_string(a),
                      on ? EmotionSet{Emotion::Fear} : EmotionSet{}});
      }
    }
    double sum = 0;
    int defined = 0;
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<double> others;
      for (std::size_t t = 0; t < 10; ++t) {
        double s = 0;
        for (std::size_t b = 0; b < 3; ++b)
          if (b != a) s += v[b][t];
        others.push_back(s / 2);
      }
      const double r = oracle_spearman(v[a], others);
      if (std::isfinite(r)) {
        sum += r;
        ++defined;
      }
    }
    const auto got = interrater_correlation(rs, Emotion::Fear);
    if (defined == 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == doctest::Approx(sum / defined).epsilon(1e-12));
    }
  }
}

TEST_CASE("agreement report JSON") {
  std::vector<AnnotationRecord> rs;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t)
    for (int a = 0; a < 3; ++a) rs.push_back({"t" + std::to_string(t), "a" + std::to_string(a), random_set(rng)});
  const auto r = compute_agreement(rs);
  const auto j = to_json(r);
  CHECK(j.contains("pea_max"));
  CHECK(j.contains("pea_min"));
  CHECK(j.at("pea_max").at("score").get<double>() >= j.at("pea_min").at("score").get<double>());
  CHECK_FALSE(to_json(r, "best").contains("pea_min"));
  CHECK_FALSE(to_json(r, "worst").contains("pea_max"));
  REQUIRE(r.fleiss_kappa.has_value());
  double s = 0;
  int n = 0;
  for (const auto& k : r.fleiss_per_emotion)
    if (k) s += *k, ++n;
  CHECK(*r.fleiss_kappa == doctest::Approx(s / n));
}
