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

#include "config_file.h"

#include <fstream>
#include <sstream>

#include "edacsc/error.h"

namespace edacsc {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Error LineError(std::size_t line, const std::string& what) {
  return UsageError("config line " + std::to_string(line) + ": " + what);
}

std::string ParseValue(std::string_view raw, std::size_t line) {
  if (raw.empty()) throw LineError(line, "missing value");
  const char q = raw.front();
  if (q != '"' && q != '\'') {
    const auto hash = raw.find('#');
    return std::string(Trim(raw.substr(0, hash)));
  }
  std::string out;
  std::size_t i = 1;
  for (; i < raw.size() && raw[i] != q; ++i) {
    if (q == '"' && raw[i] == '\\' && i + 1 < raw.size()) {
      const char c = raw[++i];
      switch (c) {
        case 'n':
          out += '\n';
          break;
        case 't':
          out += '\t';
          break;
        default:
          out += c;
      }
    } else {
      out += raw[i];
    }
  }
  if (i == raw.size()) throw LineError(line, "unterminated string");
  const auto rest = Trim(raw.substr(i + 1));
  if (!rest.empty() && rest.front() != '#') {
    throw LineError(line, "trailing characters after value");
  }
  return out;
}

}  // namespace

std::vector<ConfigEntry> ParseConfig(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::string section;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text =
        nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string_view::npos) {
        throw LineError(line_number, "unterminated section header");
      }
      section = std::string(Trim(line.substr(1, close - 1)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw LineError(line_number, "expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    if (key.empty()) throw LineError(line_number, "empty key");
    entries.push_back({section, std::string(key),
                       ParseValue(Trim(line.substr(eq + 1)), line_number),
                       line_number});
  }
  return entries;
}

std::vector<ConfigEntry> LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace edacsc
