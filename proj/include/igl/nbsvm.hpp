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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "igl/features.hpp"
#include "igl/types.hpp"

namespace igl {

struct NbsvmConfig {
  double alpha = 1.0;    // NB smoothing
  double lambda = 1e-2;  // L2 strength
  int iterations = 300;  // full-batch subgradient steps
  bool binarize = true;
  std::uint64_t seed = 0;
};

/// score(x) = w . f(x) + bias where f(x) = r o 1{x > 0} when NB ratios are
/// present and x otherwise. Positive scores mean OutGroup.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::optional<NBRatios> nb;

  double score(const SparseVector& x) const;
  IGRLabel predict(const SparseVector& x) const;
  /// Weight on the raw (binary) feature i: w_i * r_i, or w_i without ratios.
  double effective_weight(std::size_t i) const;
};

/// r o 1{x > 0}, dropping features whose ratio is exactly zero.
SparseVector nb_transform(const SparseVector& x, const NBRatios& ratios);

/// NB-SVM: NB log-count ratios scale binarized features, then an L2
/// regularized hinge-loss classifier is fitted by full-batch Pegasos
/// subgradient descent with an unregularized bias. The update averages
/// over the training set, so duplicating every example leaves the result
/// unchanged. Throws ValidationError when only one class is present.
struct HingeSolution {
  std::vector<double> weights;
  double bias = 0.0;
};

/// Full-batch projected subgradient descent on the L2-regularized hinge loss
/// (step 1/(lambda t), weights kept inside the 1/sqrt(lambda) ball), returning
/// the average of the second half of the iterates. The objective uses the
/// mean loss, so repeating every example leaves the solution unchanged.
HingeSolution train_hinge_l2(std::span<const SparseVector> features, const std::vector<bool>& positive,
                             std::size_t dim, double lambda, int iterations);

LinearModel train_nbsvm(std::span<const SparseVector> x, std::span<const IGRLabel> y, std::size_t dim,
                        const NbsvmConfig& config = {});

}  // namespace igl
