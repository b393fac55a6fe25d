// Copyright 2026 The edacsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDACSC_TOOLS_CONFIG_FILE_H_
#define EDACSC_TOOLS_CONFIG_FILE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace edacsc {

// One `key = value` line of a run config. `section` is the dotted subcommand
// path of the enclosing [section] header, empty for top-level keys.
struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// Parses a small TOML subset: comments (#), [section] headers, and
// key = value with bare, "double-quoted" or 'single-quoted' values.
// Throws a usage Error on malformed lines.
std::vector<ConfigEntry> ParseConfig(std::string_view text);
std::vector<ConfigEntry> LoadConfig(const std::string& path);

}  // namespace edacsc

#endif  // EDACSC_TOOLS_CONFIG_FILE_H_
