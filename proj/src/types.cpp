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

#include "igl/types.hpp"

#include <bit>
#include <cctype>

#include "igl/errors.hpp"

namespace igl {
namespace {

constexpr std::array<std::string_view, kNumEmotions> kEmotionNames = {
    "joy", "admiration", "fear", "surprise", "sadness", "disgust", "anger", "interest"};
constexpr std::array<std::string_view, kNumEmotions> kEmotionDisplay = {
    "Joy", "Admiration", "Fear", "Surprise", "Sadness", "Disgust", "Anger", "Interest"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Emotion e) { return kEmotionNames[index_of(e)]; }
std::string_view display_name(Emotion e) { return kEmotionDisplay[index_of(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) {
  const std::string l = lower(name);
  for (Emotion e : kAllEmotions)
    if (kEmotionNames[index_of(e)] == l) return e;
  return std::nullopt;
}

std::string_view to_string(Party p) { return p == Party::Democrat ? "Democrat" : "Republican"; }

std::optional<Party> parse_party(std::string_view name) {
  const std::string l = lower(name);
  if (l == "democrat") return Party::Democrat;
  if (l == "republican") return Party::Republican;
  return std::nullopt;
}

std::string_view to_string(IGRLabel l) { return l == IGRLabel::InGroup ? "in" : "out"; }

std::optional<IGRLabel> parse_igr(std::string_view name) {
  const std::string l = lower(name);
  if (l == "in" || l == "ingroup" || l == "in-group") return IGRLabel::InGroup;
  if (l == "out" || l == "outgroup" || l == "out-group") return IGRLabel::OutGroup;
  return std::nullopt;
}

std::size_t EmotionSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Emotion> EmotionSet::members() const {
  std::vector<Emotion> out;
  for (Emotion e : kAllEmotions)
    if (contains(e)) out.push_back(e);
  return out;
}

std::vector<std::string> emotion_names(EmotionSet s) {
  std::vector<std::string> out;
  for (Emotion e : s.members()) out.emplace_back(to_string(e));
  return out;
}

EmotionSet emotion_set_from_names(const std::vector<std::string>& names) {
  EmotionSet s;
  for (const auto& n : names) {
    auto e = parse_emotion(n);
    if (!e) throw ValidationError("unknown emotion '" + n + "'");
    if (s.contains(*e)) throw ValidationError("duplicate emotion '" + n + "'");
    s.insert(*e);
  }
  return s;
}

}  // namespace igl
