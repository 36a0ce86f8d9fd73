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

#include "igl/pipeline.hpp"

#include "igl/agreement.hpp"
#include "igl/analysis.hpp"
#include "igl/dataset.hpp"
#include "igl/errors.hpp"
#include "igl/io.hpp"

namespace igl {
namespace {

using nlohmann::json;

json emotion_scores_json(std::span<const EmotionPRF> runs) {
  json j = json::object();
  auto summarize = [&](auto get) -> json {
    std::vector<double> vals;
    for (const auto& r : runs)
      if (auto v = get(r)) vals.push_back(*v);
    return vals.empty() ? json(nullptr) : to_json(aggregate_restarts(vals));
  };
  for (Emotion e : kAllEmotions)
    j[std::string(to_string(e))] = summarize([&](const EmotionPRF& r) -> std::optional<double> {
      const auto& p = r.per_emotion[index_of(e)];
      return p ? std::optional<double>(p->f1) : std::nullopt;
    });
  j["no_emotion"] = summarize([](const EmotionPRF& r) -> std::optional<double> {
    return r.no_emotion ? std::optional<double>(r.no_emotion->f1) : std::nullopt;
  });
  j["macro_f1"] = summarize([](const EmotionPRF& r) -> std::optional<double> { return emotion_macro_f1(r); });
  return j;
}

}  // namespace

json run_ingest(const IngestOptions& opt) {
  const MemberDirectory dir = load_member_directory(opt.members);
  const auto tweets = load_tweets(opt.tweets);
  const auto filtered = filter_interpersonal(tweets, dir);
  auto built = build_utterances(filtered, dir, opt.placeholder);
  std::vector<Utterance> kept = opt.per_year ? sample_balanced(built.utterances, *opt.per_year, opt.seed)
                                             : std::move(built.utterances);
  std::string out;
  for (const auto& u : kept) out += io::dump_line(to_json(u)) + "\n";
  io::write_file(opt.out, out);
  return {{"tweets", tweets.size()},
          {"interpersonal", filtered.size()},
          {"dropped_repeated_target", built.dropped_multi_placeholder},
          {"utterances", kept.size()}};
}

json run_aggregate(const AggregateOptions& opt) {
  const auto records = load_annotations(opt.annotations);
  const auto utterances = load_utterances(opt.utterances);
  auto built = build_examples(utterances, records);
  const std::size_t n = built.examples.size();
  io::write_file(opt.out / "all.jsonl", format_examples(built.examples));
  DatasetSplit split = split_dataset(std::move(built.examples), {}, opt.seed);
  io::write_file(opt.out / "train.jsonl", format_examples(split.train));
  io::write_file(opt.out / "dev.jsonl", format_examples(split.dev));
  io::write_file(opt.out / "test.jsonl", format_examples(split.test));

  const auto table = emotion_count_table(split);
  json counts = json::object();
  for (Emotion e : kAllEmotions) {
    const auto& c = table.emotion[index_of(e)];
    if (c[0] + c[1] + c[2] == 0) continue;
    counts[std::string(to_string(e))] = {{"train", c[0]}, {"dev", c[1]}, {"test", c[2]}};
  }
  counts["no_emotion"] = {{"train", table.no_emotion[0]}, {"dev", table.no_emotion[1]}, {"test", table.no_emotion[2]}};
  json summary = {{"examples", n},
                  {"missing_annotations", built.missing_annotations},
                  {"train", split.train.size()},
                  {"dev", split.dev.size()},
                  {"test", split.test.size()},
                  {"emotion_counts", counts}};
  io::write_file(opt.out / "counts.json", io::dump_pretty(summary));
  return summary;
}

SavedModel train_model(const TrainOptions& opt, std::span<const LabeledExample> train,
                       std::span<const LabeledExample> dev) {
  if (train.empty()) throw ValidationError("training set is empty");
  SavedModel m;
  m.kind = opt.model;
  m.task = opt.task;
  m.seed = opt.seed;
  m.binarize = opt.binarize;
  auto require_task = [&](TaskMode t) {
    if (opt.task != t)
      throw ValidationError("model '" + std::string(to_string(opt.model)) + "' does not support task '" +
                            std::string(to_string(opt.task)) + "'");
  };

  switch (opt.model) {
    case ModelKind::Majority: {
      require_task(TaskMode::IGROnly);
      std::vector<IGRLabel> labels;
      for (const auto& ex : train) labels.push_back(ex.igr);
      m.majority = train_majority(labels);
      break;
    }
    case ModelKind::SentimentRule:
      require_task(TaskMode::IGROnly);
      if (!opt.sentiment_lexicon) throw ValidationError("sentrule needs --sentiment-lexicon");
      m.sentiment = load_sentiment_lexicon(*opt.sentiment_lexicon);
      break;
    case ModelKind::EmoLex:
      require_task(TaskMode::EmotionOnly);
      if (!opt.lexicon) throw ValidationError("emolex needs --lexicon");
      if (!(opt.emolex_threshold > 0)) throw ConfigError("emolex threshold must be > 0");
      m.emotion_lexicon = load_emotion_lexicon(*opt.lexicon);
      m.emolex_threshold = opt.emolex_threshold;
      break;
    case ModelKind::NbSvm: {
      require_task(TaskMode::IGROnly);
      m.vocab = fit_vocab(train, opt.vocab_size, opt.min_count);
      const auto enc = encode_examples(train, m.vocab, opt.binarize);
      m.nbsvm = opt.nbsvm;
      m.nbsvm.seed = opt.seed;
      m.linear = train_nbsvm(enc.x, enc.igr, m.vocab.size(), m.nbsvm);
      break;
    }
    case ModelKind::Mlp: {
      if (dev.empty()) throw ValidationError("mlp training needs a non-empty dev set");
      m.vocab = fit_vocab(train, opt.vocab_size, opt.min_count);
      const auto tr = encode_examples(train, m.vocab, opt.binarize);
      const auto dv = encode_examples(dev, m.vocab, opt.binarize);
      TrainConfig cfg = opt.network.value_or(TrainConfig::defaults_for(opt.task));
      cfg.seed = opt.seed;
      m.restarts = train_multitask_restarts(tr, dv, m.vocab.size(), cfg, opt.task, opt.jobs);
      break;
    }
  }
  return m;
}

json run_train(const TrainOptions& opt) {
  const auto train = load_examples(opt.train);
  std::vector<LabeledExample> dev;
  if (!opt.dev.empty()) dev = load_examples(opt.dev);
  const SavedModel m = train_model(opt, train, dev);
  save_model(m, opt.out);
  json summary = {{"model", to_string(m.kind)}, {"task", to_string(m.task)}, {"train", train.size()},
                  {"dev", dev.size()},         {"vocab", m.vocab.size()}};
  if (m.kind == ModelKind::Mlp) {
    json runs = json::array();
    for (const auto& r : m.restarts) runs.push_back({{"best_epoch", r.best_epoch}, {"epochs_run", r.epochs_run}});
    summary["restarts"] = runs;
  }
  return summary;
}

json evaluate_model(const SavedModel& model, std::span<const LabeledExample> test, const SavedModel* compare,
                    std::size_t bootstrap, std::uint64_t seed, BootstrapVariant variant, unsigned jobs) {
  if (test.empty()) throw ValidationError("test set is empty");
  std::vector<IGRLabel> gold_igr;
  std::vector<EmotionSet> gold_emo;
  for (const auto& ex : test) {
    gold_igr.push_back(ex.igr);
    gold_emo.push_back(ex.emotions);
  }
  const auto runs = predict_all(model, test);

  json report = {{"model", to_string(model.kind)},
                 {"task", to_string(model.task)},
                 {"examples", test.size()},
                 {"restarts", runs.size()}};

  if (model.predicts_igr()) {
    json per = json::array();
    std::vector<double> macro, out_f1, in_f1;
    for (const auto& r : runs) {
      const PRF in = prf_binary(r.igr, gold_igr, IGRLabel::InGroup);
      const PRF out = prf_binary(r.igr, gold_igr, IGRLabel::OutGroup);
      macro.push_back(0.5 * (in.f1 + out.f1));
      in_f1.push_back(in.f1);
      out_f1.push_back(out.f1);
      per.push_back({{"in_group", to_json(in)}, {"out_group", to_json(out)}, {"macro_f1", macro.back()}});
    }
    report["igr"] = {{"per_restart", per},
                     {"macro_f1", to_json(aggregate_restarts(macro))},
                     {"in_group_f1", to_json(aggregate_restarts(in_f1))},
                     {"out_group_f1", to_json(aggregate_restarts(out_f1))}};
  }

  if (model.predicts_emotions()) {
    std::vector<EmotionPRF> all;
    std::array<std::vector<EmotionPRF>, 2> by_group;
    json per = json::array();
    for (const auto& r : runs) {
      all.push_back(prf_per_emotion(r.emotions, gold_emo));
      per.push_back(to_json(all.back()));
      for (std::size_t g = 0; g < 2; ++g) {
        std::vector<EmotionSet> p, gl;
        for (std::size_t i = 0; i < test.size(); ++i) {
          if (static_cast<std::size_t>(gold_igr[i]) != g) continue;
          p.push_back(r.emotions[i]);
          gl.push_back(gold_emo[i]);
        }
        by_group[g].push_back(prf_per_emotion(p, gl));
      }
    }
    report["emotion"] = {{"per_restart", per},
                         {"f1", emotion_scores_json(all)},
                         {"by_igr",
                          {{"in_group", emotion_scores_json(by_group[0])},
                           {"out_group", emotion_scores_json(by_group[1])}}}};
  }

  if (compare != nullptr) {
    const auto other = predict_all(*compare, test);
    json cmp = {{"against", to_string(compare->kind)}, {"resamples", bootstrap}, {"seed", seed}};
    if (model.predicts_igr() && compare->predicts_igr()) {
      auto metric = [](std::span<const IGRLabel> p, std::span<const IGRLabel> g) { return igr_macro_f1(p, g); };
      cmp["igr_macro_f1"] = to_json(paired_bootstrap<IGRLabel>(runs[0].igr, other[0].igr, gold_igr, metric,
                                                               bootstrap, seed, variant, jobs));
    }
    if (model.predicts_emotions() && compare->predicts_emotions()) {
      auto macro = [](std::span<const EmotionSet> p, std::span<const EmotionSet> g) {
        return emotion_macro_f1(prf_per_emotion(p, g));
      };
      cmp["emotion_macro_f1"] = to_json(paired_bootstrap<EmotionSet>(runs[0].emotions, other[0].emotions, gold_emo,
                                                                     macro, bootstrap, seed, variant, jobs));
      json per = json::object();
      for (Emotion e : kAllEmotions) {
        const bool present = std::any_of(gold_emo.begin(), gold_emo.end(), [&](EmotionSet s) { return s.contains(e); });
        if (!present) continue;
        auto f1 = [e](std::span<const EmotionSet> p, std::span<const EmotionSet> g) {
          const auto& v = prf_per_emotion(p, g).per_emotion[index_of(e)];
          return v ? v->f1 : 0.0;
        };
        per[std::string(to_string(e))] = to_json(paired_bootstrap<EmotionSet>(
            runs[0].emotions, other[0].emotions, gold_emo, f1, bootstrap, seed, variant, jobs));
      }
      cmp["per_emotion_f1"] = per;
    }
    report["comparison"] = cmp;
  }
  return report;
}

json run_evaluate(const EvaluateOptions& opt) {
  if (opt.bootstrap < kMinBootstrapResamples)
    throw ConfigError("--bootstrap must be at least " + std::to_string(kMinBootstrapResamples));
  const SavedModel model = load_model(opt.model);
  const auto test = load_examples(opt.test);
  std::optional<SavedModel> compare;
  if (opt.compare) compare = load_model(*opt.compare);
  json report = evaluate_model(model, test, compare ? &*compare : nullptr, opt.bootstrap, opt.seed, opt.variant,
                               opt.jobs);
  io::write_file(opt.out, io::dump_pretty(report));
  return report;
}

json run_analyze(const AnalyzeOptions& opt) {
  const auto data = load_examples(opt.data);
  std::optional<SavedModel> model;
  if (opt.model) {
    model = load_model(*opt.model);
    if (model->kind != ModelKind::NbSvm)
      throw ValidationError("analyze --model expects a linear (nbsvm) model");
  }
  const AnalysisReport report =
      analyze_dataset(data, opt.topk, model ? &model->linear : nullptr, model ? &model->vocab : nullptr, opt.n_features);
  emit_report(report, opt.out);
  return {{"examples", data.size()}, {"out", opt.out.string()}};
}

}  // namespace igl
