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

#include "igl/dataset.hpp"

namespace igl {

EncodedDataset encode_examples(std::span<const LabeledExample> examples, const Vocab& vocab, bool binarize) {
  EncodedDataset d;
  d.tokens.reserve(examples.size());
  d.x.reserve(examples.size());
  for (const auto& ex : examples) {
    d.tokens.push_back(tokenize(ex.utterance.masked_text));
    d.x.push_back(vectorize(d.tokens.back(), vocab, binarize));
    d.igr.push_back(ex.igr);
    d.emotions.push_back(ex.emotions);
  }
  return d;
}

Vocab fit_vocab(std::span<const LabeledExample> examples, std::size_t max_size, std::size_t min_count) {
  std::vector<Tokens> corpus;
  corpus.reserve(examples.size());
  for (const auto& ex : examples) corpus.push_back(tokenize(ex.utterance.masked_text));
  return Vocab::fit(corpus, max_size, min_count);
}

}  // namespace igl
