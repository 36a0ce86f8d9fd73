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

#include "igl/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "igl/errors.hpp"
#include "igl/io.hpp"
#include "igl/rng.hpp"

namespace igl {
namespace {

bool is_handle_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string strip_at(std::string_view s) {
  if (!s.empty() && s.front() == '@') s.remove_prefix(1);
  return lower(s);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& source, std::size_t lineno, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, lineno, std::string("bad ") + what + " '" + s + "'");
  }
}

}  // namespace

void MemberDirectory::add(Member m) {
  m.handle = strip_at(m.handle);
  if (m.handle.empty()) throw ValidationError("member handle is empty");
  if (m.active_years.first > m.active_years.last)
    throw ValidationError("member '" + m.handle + "' has year_start > year_end");
  if (members_.contains(m.handle)) throw ValidationError("duplicate member handle '" + m.handle + "'");
  std::string key = m.handle;
  members_.emplace(std::move(key), std::move(m));
}

const Member* MemberDirectory::find(std::string_view handle) const {
  auto it = members_.find(strip_at(handle));
  return it == members_.end() ? nullptr : &it->second;
}

MemberDirectory parse_member_directory(std::istream& in, const std::string& source) {
  MemberDirectory dir;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() < 4) throw ParseError(source, lineno, "expected 4 tab-separated columns");
    Member m;
    m.handle = cols[0];
    auto party = parse_party(cols[1]);
    if (!party) throw ParseError(source, lineno, "unknown party '" + cols[1] + "'");
    m.party = *party;
    m.active_years = {parse_int(cols[2], source, lineno, "year_start"),
                      parse_int(cols[3], source, lineno, "year_end")};
    for (std::size_t i = 4; i < cols.size(); ++i) m.extra += (i > 4 ? "\t" : "") + cols[i];
    try {
      dir.add(std::move(m));
    } catch (const ValidationError& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return dir;
}

MemberDirectory load_member_directory(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  return parse_member_directory(in, path.string());
}

std::string format_member_directory(const MemberDirectory& dir) {
  std::string out = "# handle\tparty\tyear_start\tyear_end\n";
  for (const auto& [handle, m] : dir.members()) {
    out += handle + "\t" + std::string(to_string(m.party)) + "\t" + std::to_string(m.active_years.first) +
           "\t" + std::to_string(m.active_years.last);
    if (!m.extra.empty()) out += "\t" + m.extra;
    out += "\n";
  }
  return out;
}

RawTweet tweet_from_json(const nlohmann::json& j) {
  RawTweet t;
  t.id = j.at("id").get<std::string>();
  t.speaker_handle = strip_at(j.at("speaker").get<std::string>());
  t.text = j.at("text").get<std::string>();
  if (j.contains("mentions"))
    for (const auto& m : j.at("mentions")) t.mentions.push_back(strip_at(m.get<std::string>()));
  t.year = j.at("year").get<int>();
  t.is_retweet = j.value("is_retweet", false);
  return t;
}

nlohmann::json to_json(const RawTweet& t) {
  return {{"id", t.id},     {"speaker", t.speaker_handle}, {"text", t.text},
          {"mentions", t.mentions}, {"year", t.year},   {"is_retweet", t.is_retweet}};
}

std::vector<RawTweet> load_tweets(const std::filesystem::path& path) {
  std::vector<RawTweet> out;
  std::set<std::string, std::less<>> ids;
  io::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) {
    RawTweet t = tweet_from_json(j);
    if (!ids.insert(t.id).second) throw ValidationError("duplicate tweet id '" + t.id + "'");
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<std::string> extract_mentions(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '@') continue;
    // A handle inside a longer run (e.g. an e-mail address) is not a mention.
    if (i > 0 && is_handle_char(text[i - 1])) continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_handle_char(text[j])) ++j;
    if (j > i + 1) {
      std::string h = lower(text.substr(i + 1, j - i - 1));
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    i = j - 1;
  }
  return out;
}

std::vector<std::string> effective_mentions(const RawTweet& t) {
  std::vector<std::string> out;
  auto push = [&](std::string h) {
    h = strip_at(h);
    if (h.empty() || h == t.speaker_handle) return;
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  };
  for (const auto& m : t.mentions) push(m);
  for (auto& m : extract_mentions(t.text)) push(std::move(m));
  return out;
}

std::vector<RawTweet> filter_interpersonal(std::span<const RawTweet> tweets, const MemberDirectory& dir) {
  std::vector<RawTweet> out;
  for (const RawTweet& t : tweets) {
    if (t.is_retweet || !dir.contains(t.speaker_handle)) continue;
    std::size_t known = 0;
    for (const auto& m : effective_mentions(t)) known += dir.contains(m) ? 1 : 0;
    if (known == 1) out.push_back(t);
  }
  return out;
}

IGRLabel derive_igr(Party speaker, Party target) {
  return speaker == target ? IGRLabel::InGroup : IGRLabel::OutGroup;
}

std::string mask_target(std::string_view text, std::string_view target_handle, std::string_view placeholder) {
  const std::string target = strip_at(target_handle);
  std::string out;
  out.reserve(text.size());
  std::size_t replaced = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '@' && (i == 0 || !is_handle_char(text[i - 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && is_handle_char(text[j])) ++j;
      if (j > i + 1 && lower(text.substr(i + 1, j - i - 1)) == target) {
        out += placeholder;
        ++replaced;
        i = j;
        continue;
      }
      out.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    out += text[i++];
  }
  if (replaced == 0) throw ValidationError("target '@" + target + "' does not occur in text");
  return out;
}

nlohmann::json to_json(const Utterance& u) {
  return {{"id", u.id},
          {"masked_text", u.masked_text},
          {"speaker_party", to_string(u.speaker_party)},
          {"target", u.target_handle},
          {"target_party", to_string(u.target_party)},
          {"igr", to_string(u.igr)},
          {"year", u.year}};
}

Utterance utterance_from_json(const nlohmann::json& j) {
  Utterance u;
  u.id = j.at("id").get<std::string>();
  u.masked_text = j.at("masked_text").get<std::string>();
  auto sp = parse_party(j.at("speaker_party").get<std::string>());
  auto tp = parse_party(j.at("target_party").get<std::string>());
  if (!sp || !tp) throw ValidationError("unknown party in utterance '" + u.id + "'");
  u.speaker_party = *sp;
  u.target_party = *tp;
  u.target_handle = j.at("target").get<std::string>();
  auto igr = parse_igr(j.at("igr").get<std::string>());
  if (!igr) throw ValidationError("unknown igr label in utterance '" + u.id + "'");
  u.igr = *igr;
  if (u.igr != derive_igr(u.speaker_party, u.target_party))
    throw ValidationError("igr label of utterance '" + u.id + "' contradicts the parties");
  u.year = j.at("year").get<int>();
  return u;
}

std::vector<Utterance> load_utterances(const std::filesystem::path& path) {
  std::vector<Utterance> out;
  io::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) { out.push_back(utterance_from_json(j)); });
  return out;
}

UtteranceBuild build_utterances(std::span<const RawTweet> filtered, const MemberDirectory& dir,
                                std::string_view placeholder) {
  UtteranceBuild result;
  for (const RawTweet& t : filtered) {
    const Member* speaker = dir.find(t.speaker_handle);
    const Member* target = nullptr;
    for (const auto& m : effective_mentions(t)) {
      if (const Member* found = dir.find(m)) target = found;
    }
    if (speaker == nullptr || target == nullptr)
      throw ValidationError("tweet '" + t.id + "' has not passed filter_interpersonal");

    std::string masked = mask_target(t.text, target->handle, placeholder);
    std::size_t occurrences = 0;
    for (auto pos = masked.find(placeholder); pos != std::string::npos;
         pos = masked.find(placeholder, pos + placeholder.size()))
      ++occurrences;
    if (occurrences != 1) {
      ++result.dropped_multi_placeholder;
      continue;
    }
    Utterance u;
    u.id = t.id;
    u.masked_text = std::move(masked);
    u.speaker_party = speaker->party;
    u.target_handle = target->handle;
    u.target_party = target->party;
    u.igr = derive_igr(speaker->party, target->party);
    u.year = t.year;
    result.utterances.push_back(std::move(u));
  }
  return result;
}

std::vector<Utterance> sample_balanced(std::span<const Utterance> utterances, int per_year_target,
                                       std::uint64_t seed) {
  if (per_year_target < 2 || per_year_target % 2 != 0)
    throw ConfigError("per-year target must be an even number >= 2");
  std::map<int, std::array<std::vector<const Utterance*>, 2>> by_year;
  for (const Utterance& u : utterances) by_year[u.year][static_cast<std::size_t>(u.igr)].push_back(&u);

  std::vector<Utterance> out;
  for (auto& [year, cells] : by_year) {
    const std::size_t take = std::min({cells[0].size(), cells[1].size(), static_cast<std::size_t>(per_year_target / 2)});
    for (std::size_t c = 0; c < 2; ++c) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(year) * 2 + c));
      std::shuffle(cells[c].begin(), cells[c].end(), rng);
      for (std::size_t i = 0; i < take; ++i) out.push_back(*cells[c][i]);
    }
  }
  return out;
}

}  // namespace igl
