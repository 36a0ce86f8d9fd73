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

#include "igl/model_io.hpp"

#include <cstring>

#include "igl/errors.hpp"
#include "igl/io.hpp"

namespace igl {
namespace {

using nlohmann::json;

constexpr std::array<std::uint8_t, 4> kMagic = {'I', 'G', 'L', 'M'};

json config_to_json(const TrainConfig& c) {
  return {{"max_epochs", c.max_epochs}, {"patience", c.patience}, {"lr_head", c.lr_head},
          {"lr_encoder", c.lr_encoder}, {"dropout", c.dropout},   {"seed", c.seed},
          {"restarts", c.restarts},     {"hidden", c.hidden},     {"alternation_batch", c.alternation_batch}};
}

TrainConfig config_from_json(const json& j) {
  TrainConfig c;
  c.max_epochs = j.at("max_epochs");
  c.patience = j.at("patience");
  c.lr_head = j.at("lr_head");
  c.lr_encoder = j.at("lr_encoder");
  c.dropout = j.at("dropout");
  c.seed = j.at("seed");
  c.restarts = j.at("restarts");
  c.hidden = j.at("hidden");
  c.alternation_batch = j.at("alternation_batch");
  return c;
}

json multitask_to_json(const MultitaskModel& m) {
  return {{"input_dim", m.input_dim},
          {"hidden", m.hidden},
          {"encoder_w", m.encoder_w},
          {"encoder_b", m.encoder_b},
          {"igr_w", m.igr_w},
          {"igr_b", m.igr_b},
          {"emotion_w", m.emotion_w},
          {"emotion_b", m.emotion_b},
          {"pos_weights", m.pos_weights},
          {"emotion_active", m.emotion_active},
          {"dropout_rate", m.dropout_rate},
          {"config", config_to_json(m.config)},
          {"mode", to_string(m.mode)},
          {"best_epoch", m.best_epoch},
          {"epochs_run", m.epochs_run}};
}

MultitaskModel multitask_from_json(const json& j) {
  MultitaskModel m;
  m.input_dim = j.at("input_dim");
  m.hidden = j.at("hidden");
  m.encoder_w = j.at("encoder_w").get<std::vector<double>>();
  m.encoder_b = j.at("encoder_b").get<std::vector<double>>();
  m.igr_w = j.at("igr_w").get<std::vector<double>>();
  m.igr_b = j.at("igr_b");
  m.emotion_w = j.at("emotion_w").get<std::vector<double>>();
  m.emotion_b = j.at("emotion_b");
  m.pos_weights = j.at("pos_weights");
  m.emotion_active = j.at("emotion_active");
  m.dropout_rate = j.at("dropout_rate");
  m.config = config_from_json(j.at("config"));
  auto mode = parse_task_mode(j.at("mode").get<std::string>());
  if (!mode) throw ValidationError("model file: unknown task mode");
  m.mode = *mode;
  m.best_epoch = j.at("best_epoch");
  m.epochs_run = j.at("epochs_run");
  if (m.encoder_w.size() != m.input_dim * m.hidden || m.encoder_b.size() != m.hidden ||
      m.igr_w.size() != m.hidden || m.emotion_w.size() != kNumEmotions * m.hidden)
    throw ValidationError("model file: parameter shapes do not match the stored dimensions");
  return m;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Majority: return "majority";
    case ModelKind::SentimentRule: return "sentrule";
    case ModelKind::EmoLex: return "emolex";
    case ModelKind::NbSvm: return "nbsvm";
    case ModelKind::Mlp: return "mlp";
  }
  return "majority";
}

std::optional<ModelKind> parse_model_kind(std::string_view s) {
  for (ModelKind k : {ModelKind::Majority, ModelKind::SentimentRule, ModelKind::EmoLex, ModelKind::NbSvm, ModelKind::Mlp})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::vector<std::uint8_t> serialize_model(const SavedModel& m) {
  json j;
  j["kind"] = to_string(m.kind);
  j["task"] = to_string(m.task);
  j["seed"] = m.seed;
  j["vocab"] = m.vocab.entries();
  j["vocab_hash"] = hash_hex(m.vocab.hash());
  j["binarize"] = m.binarize;
  switch (m.kind) {
    case ModelKind::Majority:
      j["label"] = to_string(m.majority.label);
      break;
    case ModelKind::SentimentRule: {
      json lex = json::object();
      for (const auto& [w, p] : m.sentiment.entries()) lex[w] = p;
      j["sentiment_lexicon"] = lex;
      break;
    }
    case ModelKind::EmoLex: {
      json lex = json::object();
      for (const auto& [w, s] : m.emotion_lexicon.entries()) lex[w] = emotion_names(s);
      j["emotion_lexicon"] = lex;
      j["threshold"] = m.emolex_threshold;
      break;
    }
    case ModelKind::NbSvm:
      j["weights"] = m.linear.weights;
      j["bias"] = m.linear.bias;
      if (m.linear.nb) j["nb"] = {{"r", m.linear.nb->r}, {"alpha", m.linear.nb->alpha}};
      j["nbsvm_config"] = {{"alpha", m.nbsvm.alpha},
                           {"lambda", m.nbsvm.lambda},
                           {"iterations", m.nbsvm.iterations},
                           {"binarize", m.nbsvm.binarize},
                           {"seed", m.nbsvm.seed}};
      break;
    case ModelKind::Mlp: {
      json runs = json::array();
      for (const auto& r : m.restarts) runs.push_back(multitask_to_json(r));
      j["restarts"] = runs;
      break;
    }
  }
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>((kModelFormatVersion >> (8 * b)) & 0xFF));
  const auto body = json::to_cbor(j);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

void save_model(const SavedModel& model, const std::filesystem::path& path) {
  const auto bytes = serialize_model(model);
  io::write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

SavedModel deserialize_model(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
    throw ValidationError("not an intergroup-lens model file");
  std::uint32_t version = 0;
  for (int b = 0; b < 4; ++b) version |= static_cast<std::uint32_t>(bytes[4 + b]) << (8 * b);
  if (version != kModelFormatVersion)
    throw ValidationError("unsupported model format version " + std::to_string(version));

  json j = json::from_cbor(bytes.subspan(8).begin(), bytes.subspan(8).end(), true, false);
  if (j.is_discarded()) throw ValidationError("model file body is corrupt");
  try {
    SavedModel m;
    auto kind = parse_model_kind(j.at("kind").get<std::string>());
    auto task = parse_task_mode(j.at("task").get<std::string>());
    if (!kind || !task) throw ValidationError("model file: unknown kind or task");
    m.kind = *kind;
    m.task = *task;
    m.seed = j.at("seed");
    m.vocab = Vocab::from_entries(j.at("vocab").get<std::vector<std::string>>());
    if (hash_hex(m.vocab.hash()) != j.at("vocab_hash").get<std::string>())
      throw ValidationError("model file: vocabulary hash mismatch");
    m.binarize = j.at("binarize");
    switch (m.kind) {
      case ModelKind::Majority: {
        auto l = parse_igr(j.at("label").get<std::string>());
        if (!l) throw ValidationError("model file: bad majority label");
        m.majority.label = *l;
        break;
      }
      case ModelKind::SentimentRule:
        for (const auto& [w, p] : j.at("sentiment_lexicon").items()) m.sentiment.add(w, p.get<int>());
        break;
      case ModelKind::EmoLex:
        for (const auto& [w, names] : j.at("emotion_lexicon").items())
          for (Emotion e : emotion_set_from_names(names.get<std::vector<std::string>>()).members())
            m.emotion_lexicon.add(w, e);
        m.emolex_threshold = j.at("threshold");
        break;
      case ModelKind::NbSvm: {
        m.linear.weights = j.at("weights").get<std::vector<double>>();
        m.linear.bias = j.at("bias");
        if (j.contains("nb")) m.linear.nb = NBRatios{j["nb"].at("r").get<std::vector<double>>(), j["nb"].at("alpha")};
        const auto& c = j.at("nbsvm_config");
        m.nbsvm = {c.at("alpha"), c.at("lambda"), c.at("iterations"), c.at("binarize"), c.at("seed")};
        if (m.linear.weights.size() != m.vocab.size() || (m.linear.nb && m.linear.nb->r.size() != m.vocab.size()))
          throw ValidationError("model file: weight length differs from vocabulary size");
        break;
      }
      case ModelKind::Mlp:
        for (const auto& r : j.at("restarts")) {
          m.restarts.push_back(multitask_from_json(r));
          if (m.restarts.back().input_dim != m.vocab.size())
            throw ValidationError("model file: encoder input size differs from vocabulary size");
        }
        if (m.restarts.empty()) throw ValidationError("model file: no trained restarts");
        break;
    }
    return m;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("model file: ") + e.what());
  }
}

SavedModel load_model(const std::filesystem::path& path) {
  const std::string raw = io::read_file(path);
  return deserialize_model(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

std::vector<Predictions> predict_all(const SavedModel& model, std::span<const LabeledExample> examples) {
  Predictions single;
  switch (model.kind) {
    case ModelKind::Majority:
      single.igr.assign(examples.size(), model.majority.predict());
      return {single};
    case ModelKind::SentimentRule: {
      const LexiconSentiment provider(model.sentiment);
      for (const auto& ex : examples)
        single.igr.push_back(predict_sentiment_rule(ex.utterance.id, ex.utterance.masked_text, provider, model.seed));
      return {single};
    }
    case ModelKind::EmoLex:
      for (const auto& ex : examples)
        single.emotions.push_back(predict_emolex(tokenize(ex.utterance.masked_text), model.emotion_lexicon,
                                                 model.emolex_threshold));
      return {single};
    case ModelKind::NbSvm:
      for (const auto& ex : examples)
        single.igr.push_back(model.linear.predict(vectorize(tokenize(ex.utterance.masked_text), model.vocab, model.binarize)));
      return {single};
    case ModelKind::Mlp: {
      std::vector<SparseVector> xs;
      xs.reserve(examples.size());
      for (const auto& ex : examples) xs.push_back(vectorize(tokenize(ex.utterance.masked_text), model.vocab, model.binarize));
      std::vector<Predictions> out;
      for (const auto& r : model.restarts) {
        Predictions p;
        for (const auto& x : xs) {
          const auto pred = predict_multitask(r, x);
          if (model.predicts_igr()) p.igr.push_back(pred.igr);
          if (model.predicts_emotions()) p.emotions.push_back(pred.emotions);
        }
        out.push_back(std::move(p));
      }
      return out;
    }
  }
  return {single};
}

}  // namespace igl
