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

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "igl/cli.hpp"
#include "igl/io.hpp"
#include "support.hpp"

using namespace igl;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Exit status of the installed binary, with stderr captured to a file.
int run_binary(const std::string& args, const std::filesystem::path& err_file) {
  const std::string cmd = std::string(IGL_CLI_PATH) + " " + args + " >/dev/null 2>" + err_file.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("help and argument errors") {
  const auto help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("synth") != std::string::npos);
  CHECK(help.out.find("evaluate") != std::string::npos);
  CHECK(run({"train", "--help"}).code == cli::kExitOk);

  const auto unknown = run({"train", "--train", "x", "--out", "y", "--bogus", "1"});
  CHECK(unknown.code == cli::kExitValidation);
  CHECK(unknown.err.find("--bogus") != std::string::npos);

  const auto sub = run({"frobnicate"});
  CHECK(sub.code == cli::kExitValidation);
  CHECK(sub.err.find("frobnicate") != std::string::npos);

  CHECK(run({}).code == cli::kExitValidation);
  CHECK(run({"train", "--out", "m.json"}).code == cli::kExitValidation);
  CHECK(run({"train", "--train", "a", "--out", "b", "--model", "svm"}).code == cli::kExitValidation);
  CHECK(run({"agreement", "--annotations", "a", "--out", "b", "--mode", "median"}).code == cli::kExitValidation);
}

TEST_CASE("missing input files exit with the I/O code") {
  test::TempDir dir("cli-io");
  const auto r = run({"ingest", "--tweets", (dir / "none.jsonl").string(), "--members", (dir / "none.tsv").string(),
                      "--out", (dir / "u.jsonl").string()});
  CHECK(r.code == cli::kExitIo);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("binary exit codes") {
  test::TempDir dir("cli-bin");
  const auto err = dir / "err.txt";
  CHECK(run_binary("--help", err) == 0);
  CHECK(run_binary("synth --out " + (dir / "c").string() + " --whatever 3", err) == 1);
  CHECK(io::read_file(err).find("--whatever") != std::string::npos);
  CHECK(run_binary("analyze --data " + (dir / "missing.jsonl").string() + " --out " + (dir / "r").string(), err) == 2);
  CHECK(run_binary("synth --n 20 --seed 1 --out " + (dir / "c").string(), err) == 0);
  CHECK(std::filesystem::exists(dir / "c" / "tweets.jsonl"));
}

TEST_CASE("config files: flags on the command line win") {
  test::TempDir dir("cli-cfg");
  io::write_file(dir / "train.cfg", "model = sentrule\n# comment\ntask = igr\n");
  const auto args = cli::config_file_args((dir / "train.cfg").string());
  CHECK(args == std::vector<std::string>{"--model", "sentrule", "--task", "igr"});
  io::write_file(dir / "bad.cfg", "no equals sign\n");
  CHECK(run({"train", "--config", (dir / "bad.cfg").string(), "--train", "a", "--out", "b"}).code ==
        cli::kExitValidation);

  io::write_file(dir / "synth.cfg", "n = 40\nseed = 3\n");
  const auto s = run({"synth", "--config", (dir / "synth.cfg").string(), "--out", (dir / "c").string()});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out).at("tweets") == 40);
  const auto s2 = run({"synth", "--config", (dir / "synth.cfg").string(), "--n", "25", "--out", (dir / "d").string()});
  REQUIRE(s2.code == 0);
  CHECK(nlohmann::json::parse(s2.out).at("tweets") == 25);
}

TEST_CASE("seeds: global seed, subcommand override and repeatability") {
  test::TempDir dir("cli-seed");
  auto tweets = [&](const std::string& sub) { return io::read_file(dir / sub / "tweets.jsonl"); };
  REQUIRE(run({"--seed", "5", "synth", "--n", "30", "--out", (dir / "a").string()}).code == 0);
  REQUIRE(run({"synth", "--n", "30", "--seed", "5", "--out", (dir / "b").string()}).code == 0);
  REQUIRE(run({"--seed", "9", "synth", "--n", "30", "--seed", "5", "--out", (dir / "c").string()}).code == 0);
  REQUIRE(run({"synth", "--n", "30", "--seed", "6", "--out", (dir / "d").string()}).code == 0);
  CHECK(tweets("a") == tweets("b"));
  CHECK(tweets("a") == tweets("c"));
  CHECK(tweets("a") != tweets("d"));
}

TEST_CASE("end-to-end pipeline writes every report") {
  test::TempDir dir("cli-e2e");
  const std::string c = (dir / "corpus").string();
  const std::string d = (dir / "data").string();
  auto ok = [](const Result& r) {
    INFO(r.err);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
  };
  ok(run({"synth", "--n", "800", "--seed", "4", "--out", c}));
  const auto ing = ok(run({"ingest", "--tweets", c + "/tweets.jsonl", "--members", c + "/members.tsv", "--out",
                           (dir / "utt.jsonl").string()}));
  CHECK(ing.at("utterances") == 800);
  const auto agg = ok(run({"aggregate", "--annotations", c + "/annotations.jsonl", "--utterances",
                           (dir / "utt.jsonl").string(), "--out", d, "--seed", "4"}));
  for (const char* f : {"all.jsonl", "train.jsonl", "dev.jsonl", "test.jsonl", "counts.json"})
    CHECK(std::filesystem::exists(dir / "data" / f));
  (void)agg;

  const auto agr = ok(run({"agreement", "--annotations", c + "/annotations.jsonl", "--out",
                           (dir / "agreement.json").string()}));
  CHECK(std::filesystem::exists(dir / "agreement.json"));
  CHECK(nlohmann::json::parse(io::read_file(dir / "agreement.json")) == agr);

  const std::string train = d + "/train.jsonl", dev = d + "/dev.jsonl", test = d + "/test.jsonl";
  ok(run({"train", "--model", "majority", "--train", train, "--out", (dir / "maj.json").string()}));
  ok(run({"train", "--model", "sentrule", "--train", train, "--sentiment-lexicon", c + "/sentiment.tsv", "--out",
          (dir / "sent.json").string()}));
  ok(run({"train", "--model", "nbsvm", "--train", train, "--out", (dir / "nb.json").string()}));
  ok(run({"train", "--task", "emotion", "--model", "emolex", "--train", train, "--lexicon", c + "/lexicon.tsv",
          "--out", (dir / "emolex.json").string()}));
  ok(run({"train", "--task", "joint", "--model", "mlp", "--train", train, "--dev", dev, "--hidden", "16",
          "--restarts", "2", "--max-epochs", "3", "--patience", "2", "--out", (dir / "joint.json").string(), "--jobs", "2"}));

  const auto ev = ok(run({"evaluate", "--model", (dir / "nb.json").string(), "--test", test, "--compare",
                          (dir / "maj.json").string(), "--bootstrap", "1000", "--out", (dir / "eval.json").string()}));
  CHECK(ev.at("igr").at("macro_f1").at("mean").get<double>() > 0.5);
  CHECK(ev.at("comparison").at("igr_macro_f1").contains("p_value"));
  const auto joint = ok(run({"evaluate", "--model", (dir / "joint.json").string(), "--test", test, "--compare",
                             (dir / "emolex.json").string(), "--bootstrap", "1000", "--out",
                             (dir / "eval-joint.json").string()}));
  CHECK(joint.at("igr").at("per_restart").size() == 2);
  CHECK(joint.at("comparison").contains("emotion_macro_f1"));
  CHECK(run({"evaluate", "--model", (dir / "nb.json").string(), "--test", test, "--bootstrap", "10", "--out",
             (dir / "e.json").string()})
            .code == cli::kExitValidation);

  ok(run({"analyze", "--data", d + "/all.jsonl", "--model", (dir / "nb.json").string(), "--out",
          (dir / "report").string()}));
  for (const char* f : {"report.json", "report.md", "distribution.csv", "cooccurrence.csv"})
    CHECK(std::filesystem::exists(dir / "report" / f));
  CHECK(run({"analyze", "--data", d + "/all.jsonl", "--model", (dir / "maj.json").string(), "--out",
             (dir / "r2").string()})
            .code == cli::kExitValidation);
}
