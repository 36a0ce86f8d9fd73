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

#include "igl/nbsvm.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "igl/errors.hpp"
#include "igl/losses.hpp"

namespace igl {

double LinearModel::score(const SparseVector& x) const {
  double s = bias;
  for (auto [i, v] : x.entries) {
    if (i >= weights.size()) continue;
    s += nb ? (v > 0 ? weights[i] * nb->r[i] : 0.0) : weights[i] * v;
  }
  return s;
}

IGRLabel LinearModel::predict(const SparseVector& x) const {
  return score(x) > 0 ? IGRLabel::OutGroup : IGRLabel::InGroup;
}

double LinearModel::effective_weight(std::size_t i) const { return nb ? weights.at(i) * nb->r.at(i) : weights.at(i); }

SparseVector nb_transform(const SparseVector& x, const NBRatios& ratios) {
  SparseVector out;
  out.entries.reserve(x.entries.size());
  for (auto [i, v] : x.entries) {
    if (v > 0 && ratios.r.at(i) != 0.0) out.entries.emplace_back(i, ratios.r[i]);
  }
  return out;
}

HingeSolution train_hinge_l2(std::span<const SparseVector> features, const std::vector<bool>& positive,
                             std::size_t dim, double lambda, int iterations) {
  if (features.size() != positive.size()) throw ValidationError("train_hinge_l2: label count mismatch");
  if (features.empty()) throw ValidationError("train_hinge_l2 needs at least one example");
  if (!(lambda > 0) || iterations < 1) throw ConfigError("hinge solver needs lambda > 0 and iterations >= 1");
  const double n = static_cast<double>(features.size());
  const double radius = 1.0 / std::sqrt(lambda);
  std::vector<double> w(dim, 0.0), w_sum(dim, 0.0), step(dim, 0.0);
  double b = 0.0, b_sum = 0.0;
  std::size_t averaged = 0;
  const int average_from = iterations / 2 + 1;

  for (int t = 1; t <= iterations; ++t) {
    const double eta = 1.0 / (lambda * t);
    std::fill(step.begin(), step.end(), 0.0);
    double b_step = 0.0;
    for (std::size_t k = 0; k < features.size(); ++k) {
      const double label = positive[k] ? 1.0 : -1.0;
      const double score = features[k].dot(w) + b;
      const LossGrad g = hinge(score, label);
      if (g.dscore == 0.0) continue;
      for (auto [i, v] : features[k].entries) step[i] -= g.dscore * v;
      b_step -= g.dscore;
    }
    const double shrink = 1.0 - eta * lambda;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = shrink * w[i] + eta * step[i] / n;
      norm2 += w[i] * w[i];
    }
    b += eta * b_step / n;
    const double norm = std::sqrt(norm2);
    if (norm > radius) {
      const double scale = radius / norm;
      for (double& wi : w) wi *= scale;
    }
    b = std::clamp(b, -radius, radius);
    if (t >= average_from) {
      for (std::size_t i = 0; i < dim; ++i) w_sum[i] += w[i];
      b_sum += b;
      ++averaged;
    }
  }
  HingeSolution out;
  out.weights.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.weights[i] = w_sum[i] / static_cast<double>(averaged);
  out.bias = b_sum / static_cast<double>(averaged);
  return out;
}

LinearModel train_nbsvm(std::span<const SparseVector> x, std::span<const IGRLabel> y, std::size_t dim,
                        const NbsvmConfig& config) {
  if (x.size() != y.size()) throw ValidationError("train_nbsvm: label count mismatch");
  if (!(config.lambda > 0) || config.iterations < 1) throw ConfigError("nbsvm needs lambda > 0 and iterations >= 1");

  std::vector<bool> positive(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) positive[i] = y[i] == IGRLabel::OutGroup;
  std::vector<SparseVector> binarized;
  binarized.reserve(x.size());
  for (const auto& v : x) {
    SparseVector b;
    for (auto [i, c] : v.entries)
      if (c > 0) b.entries.emplace_back(i, config.binarize ? 1.0 : c);
    binarized.push_back(std::move(b));
  }
  // std::vector<bool> is not contiguous.
  std::unique_ptr<bool[]> flags(new bool[y.size()]);
  for (std::size_t i = 0; i < y.size(); ++i) flags[i] = positive[i];

  LinearModel model;
  model.nb = nb_log_count_ratios(binarized, std::span<const bool>(flags.get(), y.size()), dim, config.alpha);

  std::vector<SparseVector> features;
  features.reserve(x.size());
  for (const auto& v : binarized) features.push_back(nb_transform(v, *model.nb));

  const HingeSolution sol = train_hinge_l2(features, positive, dim, config.lambda, config.iterations);
  model.weights = sol.weights;
  model.bias = sol.bias;
  return model;
}

}  // namespace igl
