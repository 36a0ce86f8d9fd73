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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igl {

enum class Party : std::uint8_t { Democrat, Republican };

/// Interpersonal group relationship between speaker and target.
enum class IGRLabel : std::uint8_t { InGroup, OutGroup };

/// OutGroup is the positive class for every binary IGR metric and model.
inline constexpr IGRLabel kPositiveIGR = IGRLabel::OutGroup;

/// The eight basic Plutchik emotions, in wheel order.
enum class Emotion : std::uint8_t { Joy, Admiration, Fear, Surprise, Sadness, Disgust, Anger, Interest };

inline constexpr std::size_t kNumEmotions = 8;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::Joy,     Emotion::Admiration, Emotion::Fear,  Emotion::Surprise,
    Emotion::Sadness, Emotion::Disgust,    Emotion::Anger, Emotion::Interest};

inline constexpr std::size_t index_of(Emotion e) { return static_cast<std::size_t>(e); }

std::string_view to_string(Emotion e);       // canonical lowercase name
std::string_view display_name(Emotion e);    // capitalized, for tables
std::optional<Emotion> parse_emotion(std::string_view name);

std::string_view to_string(Party p);
std::optional<Party> parse_party(std::string_view name);

std::string_view to_string(IGRLabel l);
std::optional<IGRLabel> parse_igr(std::string_view name);

/// A subset of the eight emotions. The empty set is the "no emotion" label.
class EmotionSet {
 public:
  constexpr EmotionSet() = default;
  constexpr EmotionSet(std::initializer_list<Emotion> es) {
    for (Emotion e : es) insert(e);
  }

  static constexpr EmotionSet from_bits(std::uint8_t bits) {
    EmotionSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr bool contains(Emotion e) const { return (bits_ >> index_of(e)) & 1U; }
  constexpr void insert(Emotion e) { bits_ |= static_cast<std::uint8_t>(1U << index_of(e)); }
  constexpr void erase(Emotion e) { bits_ &= static_cast<std::uint8_t>(~(1U << index_of(e))); }
  constexpr void set(Emotion e, bool on) { on ? insert(e) : erase(e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  std::size_t size() const;
  std::vector<Emotion> members() const;

  constexpr bool operator==(const EmotionSet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Names of the members in canonical order, e.g. {"joy","admiration"}.
std::vector<std::string> emotion_names(EmotionSet s);
/// Throws ValidationError on unknown or duplicate names.
EmotionSet emotion_set_from_names(const std::vector<std::string>& names);

}  // namespace igl
