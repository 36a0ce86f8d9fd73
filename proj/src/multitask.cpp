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

#include "igl/multitask.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "igl/errors.hpp"
#include "igl/eval.hpp"
#include "igl/losses.hpp"

namespace igl {

std::string_view to_string(TaskMode m) {
  switch (m) {
    case TaskMode::IGROnly: return "igr";
    case TaskMode::EmotionOnly: return "emotion";
    case TaskMode::Joint: return "joint";
  }
  return "joint";
}

std::optional<TaskMode> parse_task_mode(std::string_view s) {
  if (s == "igr") return TaskMode::IGROnly;
  if (s == "emotion") return TaskMode::EmotionOnly;
  if (s == "joint") return TaskMode::Joint;
  return std::nullopt;
}

TrainConfig TrainConfig::defaults_for(TaskMode mode) {
  TrainConfig c;
  c.patience = mode == TaskMode::Joint ? 5 : 3;
  return c;
}

void TrainConfig::validate() const {
  if (max_epochs < 1) throw ConfigError("max_epochs must be >= 1");
  if (patience < 1 || patience >= max_epochs) throw ConfigError("patience must be in [1, max_epochs)");
  if (!(lr_head > 0) || !(lr_encoder > 0)) throw ConfigError("learning rates must be > 0");
  if (!(dropout >= 0 && dropout < 1)) throw ConfigError("dropout must be in [0, 1)");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  if (hidden < 1) throw ConfigError("hidden width must be >= 1");
  if (alternation_batch < 1) throw ConfigError("alternation batch must be >= 1");
}

MultitaskModel MultitaskModel::initialize(std::size_t input_dim, const TrainConfig& config, TaskMode mode) {
  config.validate();
  if (input_dim == 0) throw ValidationError("multitask model needs a non-empty vocabulary");
  MultitaskModel m;
  m.input_dim = input_dim;
  m.hidden = config.hidden;
  m.dropout_rate = config.dropout;
  m.config = config;
  m.mode = mode;
  m.pos_weights.fill(1.0);
  m.emotion_active.fill(true);

  Rng rng(mix_seed(config.seed, 0x1417));
  auto fill = [&](std::vector<double>& v, std::size_t n, std::size_t fan_in) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    v.resize(n);
    for (double& x : v) x = (2.0 * uniform01(rng) - 1.0) * bound;
  };
  fill(m.encoder_w, input_dim * m.hidden, input_dim);
  fill(m.encoder_b, m.hidden, input_dim);
  fill(m.igr_w, m.hidden, m.hidden);
  std::vector<double> tmp;
  fill(tmp, 1, m.hidden);
  m.igr_b = tmp[0];
  fill(m.emotion_w, kNumEmotions * m.hidden, m.hidden);
  fill(tmp, kNumEmotions, m.hidden);
  std::copy(tmp.begin(), tmp.end(), m.emotion_b.begin());
  return m;
}

namespace {

struct Hidden {
  std::vector<double> pre;
  std::vector<double> out;  // relu(pre) * dropout scale
};

Hidden encode(const MultitaskModel& m, const SparseVector& x, std::span<const double> scale) {
  Hidden h;
  h.pre = m.encoder_b;
  for (auto [i, v] : x.entries) {
    if (i >= m.input_dim) throw ValidationError("feature index outside the model's input dimension");
    const double* row = &m.encoder_w[static_cast<std::size_t>(i) * m.hidden];
    for (std::size_t k = 0; k < m.hidden; ++k) h.pre[k] += v * row[k];
  }
  h.out.resize(m.hidden);
  for (std::size_t k = 0; k < m.hidden; ++k) h.out[k] = std::max(0.0, h.pre[k]) * scale[k];
  return h;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

std::vector<double> dropout_scale(const MultitaskModel& m, bool train_mode, Rng& rng) {
  std::vector<double> s(m.hidden, 1.0);
  if (!train_mode || m.dropout_rate <= 0) return s;
  const double keep = 1.0 - m.dropout_rate;
  for (double& v : s) v = uniform01(rng) < m.dropout_rate ? 0.0 : 1.0 / keep;
  return s;
}

}  // namespace

MultitaskOutput forward_multitask(const MultitaskModel& model, const SparseVector& x, bool train_mode, Rng& rng) {
  const auto scale = dropout_scale(model, train_mode, rng);
  const Hidden h = encode(model, x, scale);
  MultitaskOutput out;
  out.igr_prob = sigmoid(dot(model.igr_w, h.out) + model.igr_b);
  for (std::size_t e = 0; e < kNumEmotions; ++e) {
    std::span<const double> row(&model.emotion_w[e * model.hidden], model.hidden);
    out.emotion_probs[e] = sigmoid(dot(row, h.out) + model.emotion_b[e]);
  }
  return out;
}

double multitask_loss(const MultitaskModel& model, const SparseVector& x, Head head, const Targets& targets,
                      std::span<const double> dropout_scale, MultitaskGrad* grad) {
  const std::size_t d = model.hidden;
  const Hidden h = encode(model, x, dropout_scale);
  double loss = 0.0;
  std::vector<double> d_out(d, 0.0);

  if (grad != nullptr) {
    *grad = MultitaskGrad{};
    grad->igr_w.assign(d, 0.0);
    grad->emotion_w.assign(kNumEmotions * d, 0.0);
  }

  if (head == Head::IGR) {
    const LossGrad lg = weighted_sigmoid_xent(dot(model.igr_w, h.out) + model.igr_b,
                                              targets.igr == IGRLabel::OutGroup);
    loss = lg.loss;
    if (grad != nullptr) {
      for (std::size_t k = 0; k < d; ++k) {
        grad->igr_w[k] = lg.dscore * h.out[k];
        d_out[k] = lg.dscore * model.igr_w[k];
      }
      grad->igr_b = lg.dscore;
    }
  } else {
    for (std::size_t e = 0; e < kNumEmotions; ++e) {
      if (!model.emotion_active[e]) continue;
      std::span<const double> row(&model.emotion_w[e * d], d);
      const LossGrad lg = weighted_sigmoid_xent(dot(row, h.out) + model.emotion_b[e],
                                                targets.emotions.contains(kAllEmotions[e]), model.pos_weights[e]);
      loss += lg.loss;
      if (grad != nullptr) {
        for (std::size_t k = 0; k < d; ++k) {
          grad->emotion_w[e * d + k] = lg.dscore * h.out[k];
          d_out[k] += lg.dscore * row[k];
        }
        grad->emotion_b[e] = lg.dscore;
      }
    }
  }
  if (grad == nullptr) return loss;

  grad->encoder_b.assign(d, 0.0);
  for (std::size_t k = 0; k < d; ++k)
    grad->encoder_b[k] = h.pre[k] > 0 ? d_out[k] * dropout_scale[k] : 0.0;
  grad->encoder_rows.reserve(x.entries.size());
  for (auto [i, v] : x.entries) {
    std::vector<double> row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = v * grad->encoder_b[k];
    grad->encoder_rows.push_back(std::move(row));
  }
  return loss;
}

double sgd_step(MultitaskModel& model, const SparseVector& x, Head head, const Targets& targets, Rng& rng) {
  const auto scale = dropout_scale(model, true, rng);
  MultitaskGrad g;
  const double loss = multitask_loss(model, x, head, targets, scale, &g);
  const std::size_t d = model.hidden;
  const double lr_h = model.config.lr_head;
  const double lr_e = model.config.lr_encoder;
  if (head == Head::IGR) {
    for (std::size_t k = 0; k < d; ++k) model.igr_w[k] -= lr_h * g.igr_w[k];
    model.igr_b -= lr_h * g.igr_b;
  } else {
    for (std::size_t j = 0; j < model.emotion_w.size(); ++j) model.emotion_w[j] -= lr_h * g.emotion_w[j];
    for (std::size_t e = 0; e < kNumEmotions; ++e) model.emotion_b[e] -= lr_h * g.emotion_b[e];
  }
  for (std::size_t k = 0; k < d; ++k) model.encoder_b[k] -= lr_e * g.encoder_b[k];
  for (std::size_t r = 0; r < x.entries.size(); ++r) {
    double* row = &model.encoder_w[static_cast<std::size_t>(x.entries[r].first) * d];
    for (std::size_t k = 0; k < d; ++k) row[k] -= lr_e * g.encoder_rows[r][k];
  }
  return loss;
}

void set_pos_weights(MultitaskModel& model, std::span<const EmotionSet> train) {
  for (Emotion e : kAllEmotions) {
    std::size_t pos = 0;
    for (const auto& s : train) pos += s.contains(e);
    const std::size_t k = index_of(e);
    model.emotion_active[k] = pos > 0;
    model.pos_weights[k] = pos > 0 ? static_cast<double>(train.size() - pos) / static_cast<double>(pos) : 1.0;
    // A label present in every example has no negatives; keep its weight positive.
    if (model.pos_weights[k] <= 0) model.pos_weights[k] = 1.0;
  }
}

MultitaskPrediction predict_multitask(const MultitaskModel& model, const SparseVector& x, double igr_threshold,
                                      double emotion_threshold) {
  Rng unused(0);
  const MultitaskOutput out = forward_multitask(model, x, false, unused);
  MultitaskPrediction p;
  p.igr = out.igr_prob >= igr_threshold ? IGRLabel::OutGroup : IGRLabel::InGroup;
  for (Emotion e : kAllEmotions)
    if (out.emotion_probs[index_of(e)] >= emotion_threshold) p.emotions.insert(e);
  return p;
}

bool EarlyStopping::observe(double metric) {
  ++epochs_;
  if (epochs_ == 1 || metric > best_) {
    best_ = metric;
    best_epoch_ = epochs_;
    since_best_ = 0;
    return true;
  }
  ++since_best_;
  return false;
}

double dev_metric(const MultitaskModel& model, const EncodedDataset& dev) {
  std::vector<IGRLabel> igr;
  std::vector<EmotionSet> emo;
  igr.reserve(dev.size());
  emo.reserve(dev.size());
  for (const auto& x : dev.x) {
    const auto p = predict_multitask(model, x);
    igr.push_back(p.igr);
    emo.push_back(p.emotions);
  }
  const auto emotion_f1 = [&] { return emotion_macro_f1(prf_per_emotion(emo, dev.emotions)); };
  switch (model.mode) {
    case TaskMode::IGROnly: return igr_macro_f1(igr, dev.igr);
    case TaskMode::EmotionOnly: return emotion_f1();
    case TaskMode::Joint: return 0.5 * (igr_macro_f1(igr, dev.igr) + emotion_f1());
  }
  return 0.0;
}

MultitaskModel train_multitask(const EncodedDataset& train, const EncodedDataset& dev, std::size_t input_dim,
                               const TrainConfig& config, TaskMode mode) {
  if (train.size() == 0 || dev.size() == 0) throw ValidationError("train_multitask needs non-empty train and dev");
  const bool trains_igr = mode != TaskMode::EmotionOnly;
  const bool trains_emotion = mode != TaskMode::IGROnly;
  if (trains_igr) {
    const auto first = train.igr.front();
    if (std::all_of(train.igr.begin(), train.igr.end(), [&](IGRLabel l) { return l == first; }))
      throw ValidationError("IGR training data contains a single class");
  }

  MultitaskModel model = MultitaskModel::initialize(input_dim, config, mode);
  set_pos_weights(model, train.emotions);
  if (trains_emotion && std::none_of(model.emotion_active.begin(), model.emotion_active.end(), [](bool b) { return b; }))
    throw ValidationError("emotion training data has no positive labels");

  Rng rng(mix_seed(config.seed, 0x5eed));
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  EarlyStopping stopper(config.patience);
  MultitaskModel best = model;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size(); start += config.alternation_batch) {
      const std::size_t end = std::min(order.size(), start + config.alternation_batch);
      if (trains_igr)
        for (std::size_t k = start; k < end; ++k) {
          const std::size_t i = order[k];
          sgd_step(model, train.x[i], Head::IGR, {train.igr[i], train.emotions[i]}, rng);
          if (trains_emotion && config.alternation_batch == 1)
            sgd_step(model, train.x[i], Head::Emotion, {train.igr[i], train.emotions[i]}, rng);
        }
      if (trains_emotion && !(trains_igr && config.alternation_batch == 1))
        for (std::size_t k = start; k < end; ++k) {
          const std::size_t i = order[k];
          sgd_step(model, train.x[i], Head::Emotion, {train.igr[i], train.emotions[i]}, rng);
        }
    }
    model.epochs_run = epoch;
    if (stopper.observe(dev_metric(model, dev))) {
      best = model;
      best.best_epoch = epoch;
    }
    if (stopper.should_stop()) break;
  }
  best.epochs_run = stopper.epochs();
  return best;
}

std::vector<MultitaskModel> train_multitask_restarts(const EncodedDataset& train, const EncodedDataset& dev,
                                                     std::size_t input_dim, const TrainConfig& config,
                                                     TaskMode mode, unsigned jobs) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.restarts);
  std::vector<MultitaskModel> out(n);
  auto run = [&](std::size_t r) {
    TrainConfig c = config;
    c.seed = mix_seed(config.seed, r);
    out[r] = train_multitask(train, dev, input_dim, c, mode);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    for (std::size_t r = 0; r < n; ++r) run(r);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  for (std::size_t first = 0; first < n; first += jobs) {
    std::vector<std::thread> threads;
    for (std::size_t r = first; r < std::min(n, first + jobs); ++r)
      threads.emplace_back([&, r] {
        try {
          run(r);
        } catch (...) {
          errors[r] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace igl
