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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "igl/dataset.hpp"
#include "igl/features.hpp"
#include "igl/rng.hpp"
#include "igl/types.hpp"

namespace igl {

enum class TaskMode : std::uint8_t { IGROnly, EmotionOnly, Joint };

std::string_view to_string(TaskMode m);
std::optional<TaskMode> parse_task_mode(std::string_view s);

struct TrainConfig {
  int max_epochs = 20;
  int patience = 3;
  double lr_head = 5e-3;
  double lr_encoder = 1e-3;
  double dropout = 0.1;
  std::uint64_t seed = 0;
  int restarts = 3;
  std::size_t hidden = 256;
  // Joint mode alternates tasks per item; with a batch size > 1 it runs that
  // many IGR steps, then the emotion steps over the same items.
  std::size_t alternation_batch = 1;

  /// Patience 5 for Joint, 3 otherwise; every other field at its default.
  static TrainConfig defaults_for(TaskMode mode);
  /// Throws ConfigError when an invariant is broken.
  void validate() const;

  bool operator==(const TrainConfig&) const = default;
};

/// Shared ReLU encoder with an IGR head (logit of OutGroup) and an 8-way
/// multi-label emotion head.
struct MultitaskModel {
  std::size_t input_dim = 0;
  std::size_t hidden = 0;
  std::vector<double> encoder_w;  // input_dim x hidden, row per input feature
  std::vector<double> encoder_b;  // hidden
  std::vector<double> igr_w;      // hidden
  double igr_b = 0.0;
  std::vector<double> emotion_w;  // kNumEmotions x hidden, row per emotion
  std::array<double, kNumEmotions> emotion_b{};
  std::array<double, kNumEmotions> pos_weights{};
  std::array<bool, kNumEmotions> emotion_active{};  // labels that contribute to the loss
  double dropout_rate = 0.1;
  TrainConfig config;
  TaskMode mode = TaskMode::Joint;
  int best_epoch = 0;
  int epochs_run = 0;

  /// Uniform in +-1/sqrt(fan_in) for weights and biases, seeded.
  static MultitaskModel initialize(std::size_t input_dim, const TrainConfig& config, TaskMode mode);
  bool operator==(const MultitaskModel&) const = default;
};

struct MultitaskOutput {
  double igr_prob = 0.0;  // P(OutGroup)
  std::array<double, kNumEmotions> emotion_probs{};
};

/// Dropout (inverted, rate = model.dropout_rate) is applied to the head
/// inputs only in train mode.
MultitaskOutput forward_multitask(const MultitaskModel& model, const SparseVector& x, bool train_mode, Rng& rng);

enum class Head : std::uint8_t { IGR, Emotion };

struct Targets {
  IGRLabel igr = IGRLabel::InGroup;
  EmotionSet emotions;
};

/// Gradient of one head's loss. Encoder rows are stored only for the active
/// features of x, aligned with x.entries.
struct MultitaskGrad {
  std::vector<std::vector<double>> encoder_rows;
  std::vector<double> encoder_b;
  std::vector<double> igr_w;
  double igr_b = 0.0;
  std::vector<double> emotion_w;
  std::array<double, kNumEmotions> emotion_b{};
};

/// Loss of `head` on (x, targets) for a fixed dropout scale vector (entries
/// 0 or 1/(1-p); all ones disables dropout). Fills `grad` when non-null.
/// IGR: logistic loss. Emotion: sum over active labels of the sigmoid
/// cross-entropy with positive terms scaled by pos_weights.
double multitask_loss(const MultitaskModel& model, const SparseVector& x, Head head, const Targets& targets,
                      std::span<const double> dropout_scale, MultitaskGrad* grad);

/// One SGD step on one head. Returns the loss before the step.
double sgd_step(MultitaskModel& model, const SparseVector& x, Head head, const Targets& targets, Rng& rng);

/// Negatives / positives per emotion; labels without positives are inactive.
void set_pos_weights(MultitaskModel& model, std::span<const EmotionSet> train);

struct MultitaskPrediction {
  IGRLabel igr = IGRLabel::InGroup;
  EmotionSet emotions;  // empty means no emotion
};

MultitaskPrediction predict_multitask(const MultitaskModel& model, const SparseVector& x,
                                      double igr_threshold = 0.5, double emotion_threshold = 0.5);

/// Stops once `patience` consecutive epochs bring no strict improvement.
class EarlyStopping {
 public:
  explicit EarlyStopping(int patience) : patience_(patience) {}
  /// Records the metric of the next epoch; true when it is a new best.
  bool observe(double metric);
  bool should_stop() const { return since_best_ >= patience_; }
  int best_epoch() const { return best_epoch_; }
  int epochs() const { return epochs_; }
  double best() const { return best_; }

 private:
  int patience_;
  int epochs_ = 0;
  int best_epoch_ = 0;
  int since_best_ = 0;
  double best_ = 0.0;
};

/// Dev metric used for early stopping: IGR macro-F1, emotion macro-F1, or
/// their mean in Joint mode.
double dev_metric(const MultitaskModel& model, const EncodedDataset& dev);

/// Trains one model with config.seed and returns the parameters of the best
/// dev epoch. Throws ValidationError when the IGR task sees a single class
/// or the emotion task sees no positive labels.
MultitaskModel train_multitask(const EncodedDataset& train, const EncodedDataset& dev, std::size_t input_dim,
                               const TrainConfig& config, TaskMode mode);

/// config.restarts models with seeds mix_seed(config.seed, r). Restarts run
/// on up to `jobs` threads; results do not depend on `jobs`.
std::vector<MultitaskModel> train_multitask_restarts(const EncodedDataset& train, const EncodedDataset& dev,
                                                     std::size_t input_dim, const TrainConfig& config,
                                                     TaskMode mode, unsigned jobs = 1);

}  // namespace igl
