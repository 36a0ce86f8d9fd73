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

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace igl::io {

using nlohmann::json;

/// Reads a whole file. Throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes (replacing) a file, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Calls fn(object, line_number) for every non-blank line. Lines that are not
/// valid JSON objects raise ParseError naming the line.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const json&, std::size_t)>& fn);

/// Compact single-line serialization used for every JSON-lines file.
std::string dump_line(const json& j);

/// Stable pretty serialization for reports.
std::string dump_pretty(const json& j);

}  // namespace igl::io
