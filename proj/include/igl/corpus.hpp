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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "igl/types.hpp"

namespace igl {

/// Placeholder substituted for the target mention in model inputs.
inline constexpr std::string_view kTrainingPlaceholder = "@USER";
/// Placeholder shown to annotators.
inline constexpr std::string_view kAnnotationPlaceholder = "@Doe";

struct YearRange {
  int first = 0;
  int last = 0;
};

/// A member of the legislature. Home state and chamber are carried verbatim
/// when present but never used.
struct Member {
  std::string handle;  // lowercase, without '@'
  Party party = Party::Democrat;
  YearRange active_years;
  std::string extra;
};

class MemberDirectory {
 public:
  /// Throws ValidationError on an empty or duplicate handle or an inverted
  /// year range. The handle is lowercased before insertion.
  void add(Member m);
  const Member* find(std::string_view handle) const;
  bool contains(std::string_view handle) const { return find(handle) != nullptr; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::map<std::string, Member, std::less<>>& members() const { return members_; }

 private:
  std::map<std::string, Member, std::less<>> members_;
};

/// TSV: handle, party, year_start, year_end; '#' lines skipped.
MemberDirectory parse_member_directory(std::istream& in, const std::string& source = "<stream>");
MemberDirectory load_member_directory(const std::filesystem::path& path);
std::string format_member_directory(const MemberDirectory& dir);

struct RawTweet {
  std::string id;
  std::string speaker_handle;
  std::string text;
  std::vector<std::string> mentions;
  int year = 0;
  bool is_retweet = false;
};

RawTweet tweet_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RawTweet& t);
/// Throws ParseError on malformed lines and ValidationError on duplicate ids.
std::vector<RawTweet> load_tweets(const std::filesystem::path& path);

/// Lowercased handles of every '@' followed by a maximal [A-Za-z0-9_] run,
/// deduplicated, in order of first appearance.
std::vector<std::string> extract_mentions(std::string_view text);

/// Mentions of `t` minus the speaker: the stored list merged with the ones
/// found in the text, lowercased and deduplicated.
std::vector<std::string> effective_mentions(const RawTweet& t);

/// Keeps non-retweets whose speaker is a known member and whose mentions
/// contain exactly one other known member.
std::vector<RawTweet> filter_interpersonal(std::span<const RawTweet> tweets, const MemberDirectory& dir);

IGRLabel derive_igr(Party speaker, Party target);

/// Replaces every '@handle' occurrence (case-insensitive, whole handle only)
/// with `placeholder`. Throws ValidationError if the handle is never mentioned.
std::string mask_target(std::string_view text, std::string_view target_handle, std::string_view placeholder);

struct Utterance {
  std::string id;
  std::string masked_text;
  Party speaker_party = Party::Democrat;
  std::string target_handle;
  Party target_party = Party::Democrat;
  IGRLabel igr = IGRLabel::InGroup;
  int year = 0;
};

nlohmann::json to_json(const Utterance& u);
Utterance utterance_from_json(const nlohmann::json& j);
std::vector<Utterance> load_utterances(const std::filesystem::path& path);

struct UtteranceBuild {
  std::vector<Utterance> utterances;
  std::size_t dropped_multi_placeholder = 0;  // target mentioned more than once
};

/// Builds utterances from already-filtered tweets. A tweet whose masked text
/// would not contain exactly one placeholder is dropped and counted.
UtteranceBuild build_utterances(std::span<const RawTweet> filtered, const MemberDirectory& dir,
                                std::string_view placeholder = kTrainingPlaceholder);

/// Per year, keeps min(in, out, per_year_target / 2) utterances of each IGR
/// class, chosen by a seeded shuffle. Output is ordered by year, then by the
/// shuffled order within each class, in-group first.
std::vector<Utterance> sample_balanced(std::span<const Utterance> utterances, int per_year_target,
                                       std::uint64_t seed);

}  // namespace igl
