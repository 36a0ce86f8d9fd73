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

#include <algorithm>
#include <cmath>

namespace igl {

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// log(1 + e^z) without overflow.
inline double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

struct LossGrad {
  double loss = 0.0;
  double dscore = 0.0;  // derivative of the loss with respect to the logit / score
};

/// Sigmoid cross-entropy on a logit with the positive term scaled by
/// pos_weight: pos_weight * y * -log(s) + (1 - y) * -log(1 - s).
inline LossGrad weighted_sigmoid_xent(double logit, bool label, double pos_weight = 1.0) {
  const double s = sigmoid(logit);
  if (label) return {pos_weight * softplus(-logit), pos_weight * (s - 1.0)};
  return {softplus(logit), s};
}

/// max(0, 1 - y * score) for y in {-1, +1}; subgradient 0 at the kink.
inline LossGrad hinge(double score, double y) {
  const double margin = 1.0 - y * score;
  if (margin > 0) return {margin, -y};
  return {0.0, 0.0};
}

}  // namespace igl
