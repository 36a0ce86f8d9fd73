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

#include "igl/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "igl/agreement.hpp"
#include "igl/errors.hpp"
#include "igl/io.hpp"
#include "igl/pipeline.hpp"
#include "igl/synth.hpp"

namespace igl::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Arguments of the subcommand, with values from its --config file placed
// before the command-line flags so that flags win (options take the last value).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.empty() || args.front() == "synth") return args;
  std::vector<std::string> rest;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      from_file = config_file_args(args[i + 1]);
      ++i;
    } else if (args[i].starts_with("--config=")) {
      from_file = config_file_args(args[i].substr(9));
    } else {
      rest.push_back(args[i]);
    }
  }
  if (from_file.empty()) return rest;
  // Insert right after the subcommand name (first non-option token).
  std::size_t pos = 0;
  while (pos < rest.size() && rest[pos].starts_with("-")) pos += rest[pos] == "--seed" || rest[pos] == "--jobs" ? 2 : 1;
  if (pos < rest.size()) ++pos;
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pos), from_file.begin(), from_file.end());
  return rest;
}

}  // namespace

std::vector<std::string> config_file_args(const std::string& path) {
  std::istringstream in(io::read_file(path));
  std::vector<std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path, lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(path, lineno, "empty key");
    out.push_back("--" + key);
    out.push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"intergroup-lens: in-group / out-group and interpersonal emotion corpus toolkit", "intergroup-lens"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t global_seed = 0;
  unsigned global_jobs = 1;
  app.add_option("--seed", global_seed, "Seed used by subcommands that do not set their own");
  app.add_option("--jobs", global_jobs, "Worker threads for bootstrap resampling and restarts")->check(CLI::PositiveNumber);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted signal");
  std::size_t synth_n = 3000;
  std::optional<std::uint64_t> synth_seed;
  std::string synth_out, synth_config;
  synth->add_option("--n", synth_n, "Number of tweets")->capture_default_str();
  synth->add_option("--seed", synth_seed, "Generator seed");
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--config", synth_config, "Flat key = value generator config");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Filter tweets to interpersonal utterances and mask targets");
  IngestOptions ingest_opt;
  std::string ingest_tweets, ingest_members, ingest_out;
  std::optional<std::uint64_t> ingest_seed;
  ingest->add_option("--tweets", ingest_tweets, "Tweet JSON-lines")->required();
  ingest->add_option("--members", ingest_members, "Member directory TSV")->required();
  ingest->add_option("--out", ingest_out, "Utterance JSON-lines to write")->required();
  ingest->add_option("--seed", ingest_seed, "Sampling seed");
  ingest->add_option("--per-year", ingest_opt.per_year, "Balanced sample size per year (even)");
  ingest->add_option("--placeholder", ingest_opt.placeholder, "Target placeholder")->capture_default_str();

  // aggregate
  auto* aggregate = app.add_subcommand("aggregate", "Aggregate annotations (2 of 3) and split 80/10/10");
  std::string agg_annotations, agg_utterances, agg_out;
  std::optional<std::uint64_t> agg_seed;
  aggregate->add_option("--annotations", agg_annotations, "Annotation JSON-lines")->required();
  aggregate->add_option("--utterances", agg_utterances, "Utterance JSON-lines")->required();
  aggregate->add_option("--out", agg_out, "Output directory")->required();
  aggregate->add_option("--seed", agg_seed, "Split seed");

  // agreement
  auto* agreement = app.add_subcommand("agreement", "PEA, Fleiss kappa and interrater correlation");
  std::string agr_annotations, agr_out, agr_mode = "all";
  agreement->add_option("--annotations", agr_annotations, "Annotation JSON-lines")->required();
  agreement->add_option("--mode", agr_mode, "PEA variant")
      ->check(CLI::IsMember({"best", "worst", "all"}))
      ->capture_default_str();
  agreement->add_option("--out", agr_out, "Report JSON")->required();

  // train
  auto* train = app.add_subcommand("train", "Train a classifier");
  std::string train_task = "igr", train_model = "majority", train_path, dev_path, train_out;
  std::optional<std::uint64_t> train_seed;
  std::optional<std::string> lexicon_path, sentiment_path;
  TrainOptions train_opt;
  TrainConfig net;
  std::optional<int> patience;
  bool no_binarize = false;
  train->add_option("--task", train_task, "igr | emotion | joint")
      ->check(CLI::IsMember({"igr", "emotion", "joint"}))
      ->capture_default_str();
  train->add_option("--model", train_model, "majority | sentrule | emolex | nbsvm | mlp")
      ->check(CLI::IsMember({"majority", "sentrule", "emolex", "nbsvm", "mlp"}))
      ->capture_default_str();
  train->add_option("--train", train_path, "Training examples")->required();
  train->add_option("--dev", dev_path, "Development examples (early stopping)");
  train->add_option("--seed", train_seed, "Training seed");
  train->add_option("--out", train_out, "Model file")->required();
  train->add_option("--lexicon", lexicon_path, "Emotion lexicon TSV (emolex)");
  train->add_option("--sentiment-lexicon", sentiment_path, "Sentiment lexicon TSV (sentrule)");
  train->add_option("--vocab-size", train_opt.vocab_size, "Maximum vocabulary size")->capture_default_str();
  train->add_option("--min-count", train_opt.min_count, "Minimum n-gram count")->capture_default_str();
  train->add_flag("--no-binarize", no_binarize, "Use raw n-gram counts");
  train->add_option("--threshold", train_opt.emolex_threshold, "EmoLex score threshold")->capture_default_str();
  train->add_option("--alpha", train_opt.nbsvm.alpha, "NB smoothing")->capture_default_str();
  train->add_option("--lambda", train_opt.nbsvm.lambda, "NB-SVM L2 strength")->capture_default_str();
  train->add_option("--iterations", train_opt.nbsvm.iterations, "NB-SVM subgradient steps")->capture_default_str();
  train->add_option("--max-epochs", net.max_epochs, "Network epochs")->capture_default_str();
  train->add_option("--patience", patience, "Early-stopping patience (3, or 5 for joint)");
  train->add_option("--lr-head", net.lr_head, "Head learning rate")->capture_default_str();
  train->add_option("--lr-encoder", net.lr_encoder, "Encoder learning rate")->capture_default_str();
  train->add_option("--dropout", net.dropout, "Head-input dropout")->capture_default_str();
  train->add_option("--hidden", net.hidden, "Encoder width")->capture_default_str();
  train->add_option("--restarts", net.restarts, "Random restarts")->capture_default_str();
  train->add_option("--alternation-batch", net.alternation_batch, "Items per task alternation (joint)")
      ->capture_default_str();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score a model and compare it to another");
  EvaluateOptions eval_opt;
  std::string eval_model, eval_test, eval_out, eval_variant = "count";
  std::optional<std::string> eval_compare;
  std::optional<std::uint64_t> eval_seed;
  evaluate->add_option("--model", eval_model, "Model file")->required();
  evaluate->add_option("--test", eval_test, "Test examples")->required();
  evaluate->add_option("--compare", eval_compare, "Model to compare against");
  evaluate->add_option("--bootstrap", eval_opt.bootstrap, "Bootstrap resamples")->capture_default_str();
  evaluate->add_option("--seed", eval_seed, "Bootstrap seed");
  evaluate->add_option("--variant", eval_variant, "count: p = P(delta <= 0); shift: p = P(delta > 2 * observed)")
      ->check(CLI::IsMember({"count", "shift"}))
      ->capture_default_str();
  evaluate->add_option("--out", eval_out, "Report JSON")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Descriptive tables and top features");
  AnalyzeOptions an_opt;
  std::string an_data, an_out;
  std::optional<std::string> an_model;
  analyze->add_option("--data", an_data, "Labeled examples")->required();
  analyze->add_option("--model", an_model, "Optional NB-SVM model for top features");
  analyze->add_option("--topk", an_opt.topk, "Targets counted for concentration")->capture_default_str();
  analyze->add_option("--features", an_opt.n_features, "Top features per class")->capture_default_str();
  analyze->add_option("--out", an_out, "Report directory")->required();

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }

  // CLI11 reports missing required options before unknown ones; check
  // unknown long options first so the message names the offending flag.
  {
    const CLI::App* scope = &app;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (scope == &app && (a == "--seed" || a == "--jobs")) {
        ++i;  // the value is not a subcommand
        continue;
      }
      if (scope == &app && !a.starts_with("-")) {
        const CLI::App* sub = app.get_subcommand_no_throw(a);
        if (sub == nullptr) {
          err << "error: unknown subcommand " << a << "\n";
          return kExitValidation;
        }
        scope = sub;
        continue;
      }
      if (!a.starts_with("--") || a == "--help") continue;
      const std::string name = a.substr(0, a.find('='));
      if (scope->get_option_no_throw(name) == nullptr && app.get_option_no_throw(name) == nullptr) {
        err << "error: unknown option " << name << "\n";
        return kExitValidation;
      }
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const CLI::RequiredError*>(&e) == nullptr && app.get_subcommands().empty()) err << app.help();
    return kExitValidation;
  }

  auto seed_of = [&](const std::optional<std::uint64_t>& s) { return s.value_or(global_seed); };

  try {
    nlohmann::json summary;
    if (*synth) {
      SynthConfig cfg = synth_config.empty() ? SynthConfig::defaults() : load_synth_config(synth_config);
      if (synth->count("--n") > 0 || synth_config.empty()) cfg.n_tweets = synth_n;
      if (synth_seed || app.count("--seed") > 0) cfg.seed = seed_of(synth_seed);
      const SynthCorpus corpus = generate_corpus(cfg);
      write_corpus(corpus, synth_out);
      summary = {{"tweets", corpus.tweets.size()}, {"annotations", corpus.annotations.size()}, {"out", synth_out}};
    } else if (*ingest) {
      ingest_opt.tweets = ingest_tweets;
      ingest_opt.members = ingest_members;
      ingest_opt.out = ingest_out;
      ingest_opt.seed = seed_of(ingest_seed);
      summary = run_ingest(ingest_opt);
    } else if (*aggregate) {
      summary = run_aggregate({agg_annotations, agg_utterances, agg_out, seed_of(agg_seed)});
    } else if (*agreement) {
      const auto records = load_annotations(agr_annotations);
      const auto report = compute_agreement(records);
      const auto j = to_json(report, agr_mode);
      io::write_file(agr_out, io::dump_pretty(j));
      summary = j;
    } else if (*train) {
      train_opt.task = *parse_task_mode(train_task);
      train_opt.model = *parse_model_kind(train_model);
      train_opt.train = train_path;
      train_opt.dev = dev_path;
      train_opt.out = train_out;
      train_opt.seed = seed_of(train_seed);
      if (lexicon_path) train_opt.lexicon = *lexicon_path;
      if (sentiment_path) train_opt.sentiment_lexicon = *sentiment_path;
      train_opt.binarize = !no_binarize;
      net.patience = patience.value_or(TrainConfig::defaults_for(train_opt.task).patience);
      train_opt.network = net;
      train_opt.jobs = global_jobs;
      summary = run_train(train_opt);
    } else if (*evaluate) {
      eval_opt.model = eval_model;
      eval_opt.test = eval_test;
      if (eval_compare) eval_opt.compare = *eval_compare;
      eval_opt.seed = seed_of(eval_seed);
      eval_opt.variant = eval_variant == "shift" ? BootstrapVariant::ShiftedDelta : BootstrapVariant::CountNonPositive;
      eval_opt.jobs = global_jobs;
      eval_opt.out = eval_out;
      summary = run_evaluate(eval_opt);
    } else if (*analyze) {
      an_opt.data = an_data;
      if (an_model) an_opt.model = *an_model;
      an_opt.out = an_out;
      summary = run_analyze(an_opt);
    }
    out << summary.dump() << "\n";
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace igl::cli
