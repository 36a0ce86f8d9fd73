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

#include "igl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "igl/errors.hpp"
#include "igl/io.hpp"

namespace igl {
namespace {

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round1(v));
  return buf;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string row_label(std::size_t row) {
  return row == kNoEmotionRow ? "No Emotion" : std::string(display_name(kAllEmotions[row]));
}

std::string row_key(std::size_t row) {
  return row == kNoEmotionRow ? "no_emotion" : std::string(to_string(kAllEmotions[row]));
}

constexpr std::array<const char*, 3> kColumnKeys = {"all", "in_group", "out_group"};
constexpr std::array<const char*, 3> kColumnTitles = {"All", "In-Group", "Out-Group"};

bool row_is_zero(const DistributionTable& t, std::size_t row) {
  return std::all_of(t.percent[row].begin(), t.percent[row].end(), [](double v) { return round1(v) == 0.0; });
}

bool label_unused(const CooccurrenceMatrix& m, std::size_t e) { return m[e][e] == 0; }

}  // namespace

double round1(double v) { return std::round(v * 10.0) / 10.0; }

DistributionTable igr_emotion_distribution(std::span<const LabeledExample> dataset) {
  if (dataset.empty()) throw ValidationError("igr_emotion_distribution needs a non-empty dataset");
  std::array<std::array<std::size_t, 3>, kNumEmotions + 1> counts{};
  DistributionTable t;
  for (const auto& ex : dataset) {
    const std::size_t col = ex.igr == IGRLabel::InGroup ? 1 : 2;
    ++t.group_size[0];
    ++t.group_size[col];
    for (std::size_t c : {std::size_t{0}, col}) {
      if (ex.emotions.empty()) ++counts[kNoEmotionRow][c];
      for (Emotion e : ex.emotions.members()) ++counts[index_of(e)][c];
    }
  }
  for (std::size_t r = 0; r <= kNumEmotions; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      t.percent[r][c] = t.group_size[c] == 0 ? 0.0
                                              : 100.0 * static_cast<double>(counts[r][c]) /
                                                    static_cast<double>(t.group_size[c]);
  return t;
}

CooccurrenceMatrix cooccurrence_matrix(std::span<const LabeledExample> dataset) {
  CooccurrenceMatrix m{};
  for (const auto& ex : dataset) {
    const auto members = ex.emotions.members();
    for (Emotion a : members)
      for (Emotion b : members) ++m[index_of(a)][index_of(b)];
  }
  return m;
}

TargetConcentration target_concentration(std::span<const LabeledExample> dataset, Emotion emotion, std::size_t k) {
  if (k < 1) throw ValidationError("target_concentration needs k >= 1");
  std::map<std::string, std::size_t> per_target;
  TargetConcentration out;
  for (const auto& ex : dataset) {
    if (!ex.emotions.contains(emotion)) continue;
    ++per_target[ex.utterance.target_handle];
    ++out.emotion_total;
  }
  if (out.emotion_total == 0) return out;
  std::vector<std::pair<std::string, std::size_t>> ranked(per_target.begin(), per_target.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > k) ranked.resize(k);
  std::size_t covered = 0;
  for (const auto& [h, c] : ranked) covered += c;
  out.fraction = static_cast<double>(covered) / static_cast<double>(out.emotion_total);
  out.top = std::move(ranked);
  return out;
}

TopFeatures top_features(const LinearModel& model, const Vocab& vocab, std::size_t n) {
  if (model.weights.size() != vocab.size()) throw ValidationError("top_features: model and vocabulary sizes differ");
  std::vector<std::pair<std::string, double>> pos, neg;
  for (std::uint32_t i = 0; i < vocab.size(); ++i) {
    const double w = model.effective_weight(i);
    if (w > 0) pos.emplace_back(vocab.ngram(i), w);
    if (w < 0) neg.emplace_back(vocab.ngram(i), w);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::sort(neg.begin(), neg.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  if (pos.size() > n) pos.resize(n);
  if (neg.size() > n) neg.resize(n);
  return {std::move(pos), std::move(neg)};
}

AnalysisReport analyze_dataset(std::span<const LabeledExample> dataset, std::size_t topk, const LinearModel* model,
                               const Vocab* vocab, std::size_t n_features) {
  AnalysisReport r;
  r.examples = dataset.size();
  r.topk = topk;
  if (!dataset.empty()) {
    r.distribution = igr_emotion_distribution(dataset);
    r.cooccurrence = cooccurrence_matrix(dataset);
    for (Emotion e : kAllEmotions) r.concentration[index_of(e)] = target_concentration(dataset, e, topk);
  }
  if (model != nullptr && vocab != nullptr) r.features = top_features(*model, *vocab, n_features);
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["examples"] = r.examples;
  j["distribution"] = nlohmann::json::object();
  if (r.distribution) {
    auto& d = j["distribution"];
    nlohmann::json sizes = nlohmann::json::object();
    for (std::size_t c = 0; c < 3; ++c) sizes[kColumnKeys[c]] = r.distribution->group_size[c];
    d["group_size"] = sizes;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t row = 0; row <= kNumEmotions; ++row) {
      if (row != kNoEmotionRow && row_is_zero(*r.distribution, row)) continue;
      nlohmann::json cells = {{"label", row_key(row)}};
      for (std::size_t c = 0; c < 3; ++c) cells[kColumnKeys[c]] = round1(r.distribution->percent[row][c]);
      rows.push_back(cells);
    }
    d["rows"] = rows;
  }
  j["cooccurrence"] = nlohmann::json::object();
  if (r.cooccurrence) {
    nlohmann::json labels = nlohmann::json::array();
    nlohmann::json matrix = nlohmann::json::array();
    std::vector<std::size_t> used;
    for (std::size_t e = 0; e < kNumEmotions; ++e)
      if (!label_unused(*r.cooccurrence, e)) used.push_back(e);
    for (std::size_t a : used) {
      labels.push_back(row_key(a));
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t b : used) row.push_back((*r.cooccurrence)[a][b]);
      matrix.push_back(row);
    }
    j["cooccurrence"] = {{"labels", labels}, {"matrix", matrix}};
  }
  nlohmann::json conc = nlohmann::json::object();
  if (r.examples > 0) {
    for (Emotion e : kAllEmotions) {
      const auto& c = r.concentration[index_of(e)];
      if (!c.fraction) continue;
      nlohmann::json top = nlohmann::json::array();
      for (const auto& [h, n] : c.top) top.push_back({{"target", h}, {"count", n}});
      conc[std::string(to_string(e))] = {{"fraction", *c.fraction}, {"total", c.emotion_total}, {"top", top}};
    }
  }
  j["target_concentration"] = {{"k", r.topk}, {"emotions", conc}};
  j["top_features"] = nlohmann::json::object();
  if (r.features) {
    auto list = [](const auto& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& [g, w] : v) a.push_back({{"ngram", g}, {"weight", w}});
      return a;
    };
    j["top_features"] = {{"out_group", list(r.features->outgroup)}, {"in_group", list(r.features->ingroup)}};
  }
  j["evaluations"] = r.evaluations;
  return j;
}

std::string to_markdown(const AnalysisReport& r) {
  std::string md = "# Corpus analysis\n\nExamples: " + std::to_string(r.examples) + "\n\n";
  md += "## Proportion of emotions by group relationship (%)\n\n";
  if (r.distribution) {
    md += "| Emotion | All | In-Group | Out-Group |\n|---|---|---|---|\n";
    for (std::size_t row = 0; row <= kNumEmotions; ++row) {
      if (row != kNoEmotionRow && row_is_zero(*r.distribution, row)) continue;
      md += "| " + row_label(row);
      for (std::size_t c = 0; c < 3; ++c) md += " | " + fmt1(r.distribution->percent[row][c]);
      md += " |\n";
    }
  } else {
    md += "_no data_\n";
  }
  md += "\n## Emotion co-occurrence\n\n";
  if (r.cooccurrence) {
    std::vector<std::size_t> used;
    for (std::size_t e = 0; e < kNumEmotions; ++e)
      if (!label_unused(*r.cooccurrence, e)) used.push_back(e);
    md += "| |";
    for (std::size_t b : used) md += " " + row_label(b) + " |";
    md += "\n|---|";
    for (std::size_t i = 0; i < used.size(); ++i) md += "---|";
    md += "\n";
    for (std::size_t a : used) {
      md += "| " + row_label(a) + " |";
      for (std::size_t b : used) md += " " + std::to_string((*r.cooccurrence)[a][b]) + " |";
      md += "\n";
    }
  } else {
    md += "_no data_\n";
  }
  md += "\n## Target concentration (top " + std::to_string(r.topk) + ")\n\n";
  md += "| Emotion | Share | Examples | Targets |\n|---|---|---|---|\n";
  for (Emotion e : kAllEmotions) {
    const auto& c = r.concentration[index_of(e)];
    if (!c.fraction) continue;
    std::string targets;
    for (const auto& [h, n] : c.top) targets += (targets.empty() ? "@" : ", @") + h + " (" + std::to_string(n) + ")";
    md += "| " + std::string(display_name(e)) + " | " + fmt4(*c.fraction) + " | " + std::to_string(c.emotion_total) +
          " | " + targets + " |\n";
  }
  md += "\n## Top linear-model features\n\n";
  if (r.features) {
    md += "| Rank | In-Group | Out-Group |\n|---|---|---|\n";
    const std::size_t rows = std::max(r.features->ingroup.size(), r.features->outgroup.size());
    for (std::size_t i = 0; i < rows; ++i) {
      auto cell = [&](const auto& v) {
        return i < v.size() ? v[i].first + " (" + fmt4(v[i].second) + ")" : std::string();
      };
      md += "| " + std::to_string(i + 1) + " | " + cell(r.features->ingroup) + " | " + cell(r.features->outgroup) + " |\n";
    }
  } else {
    md += "_no model_\n";
  }
  if (!r.evaluations.empty()) md += "\n## Evaluations\n\n```json\n" + r.evaluations.dump(2) + "\n```\n";
  return md;
}

std::string distribution_csv(const AnalysisReport& r) {
  std::string csv = "emotion,all,in_group,out_group\n";
  if (!r.distribution) return csv;
  for (std::size_t row = 0; row <= kNumEmotions; ++row) {
    if (row != kNoEmotionRow && row_is_zero(*r.distribution, row)) continue;
    csv += row_key(row);
    for (std::size_t c = 0; c < 3; ++c) csv += "," + fmt1(r.distribution->percent[row][c]);
    csv += "\n";
  }
  return csv;
}

std::string cooccurrence_csv(const AnalysisReport& r) {
  std::string csv = "emotion";
  if (!r.cooccurrence) return csv + "\n";
  std::vector<std::size_t> used;
  for (std::size_t e = 0; e < kNumEmotions; ++e)
    if (!label_unused(*r.cooccurrence, e)) used.push_back(e);
  for (std::size_t b : used) csv += "," + row_key(b);
  csv += "\n";
  for (std::size_t a : used) {
    csv += row_key(a);
    for (std::size_t b : used) csv += "," + std::to_string((*r.cooccurrence)[a][b]);
    csv += "\n";
  }
  return csv;
}

void emit_report(const AnalysisReport& r, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw IoError("cannot create report directory '" + out_dir.string() + "'");
  io::write_file(out_dir / "report.json", io::dump_pretty(to_json(r)));
  io::write_file(out_dir / "report.md", to_markdown(r));
  io::write_file(out_dir / "distribution.csv", distribution_csv(r));
  io::write_file(out_dir / "cooccurrence.csv", cooccurrence_csv(r));
}

}  // namespace igl
