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

#include <span>
#include <vector>

#include "igl/annotation.hpp"
#include "igl/features.hpp"

namespace igl {

/// Examples turned into model inputs against a fixed vocabulary.
struct EncodedDataset {
  std::vector<Tokens> tokens;
  std::vector<SparseVector> x;
  std::vector<IGRLabel> igr;
  std::vector<EmotionSet> emotions;

  std::size_t size() const { return x.size(); }
};

EncodedDataset encode_examples(std::span<const LabeledExample> examples, const Vocab& vocab, bool binarize = true);

/// Vocabulary fitted on the tokenized masked texts.
Vocab fit_vocab(std::span<const LabeledExample> examples, std::size_t max_size = 20000, std::size_t min_count = 2);

}  // namespace igl
