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

#include "edacsc/protocol.h"

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

std::string Excerpt(std::string_view line) {
  constexpr std::size_t kMax = 80;
  return std::string(line.substr(0, kMax)) + (line.size() > kMax ? "..." : "");
}

}  // namespace

std::string HandshakeLine() {
  ordered_json j;
  j["protocol"] = kProtocolName;
  j["version"] = kProtocolVersion;
  return Dump(j);
}

void CheckHandshake(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception&) {
    throw ProtocolError("bad handshake: " + Excerpt(line));
  }
  if (!j.is_object() || j.value("protocol", "") != kProtocolName) {
    throw ProtocolError("bad handshake: " + Excerpt(line));
  }
  const auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() ||
      version->get<int>() != kProtocolVersion) {
    throw ProtocolError("unsupported protocol version in handshake: " +
                        Excerpt(line));
  }
}

std::string FormatMessage(const CorrectorMessage& message) {
  ordered_json j;
  j["id"] = message.id;
  j["text"] = EncodeUtf8(message.text);
  return Dump(j);
}

CorrectorMessage ParseMessage(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception&) {
    throw ProtocolError("malformed message: " + Excerpt(line));
  }
  if (!j.is_object())
    throw ProtocolError("malformed message: " + Excerpt(line));
  const auto id = j.find("id");
  const auto text = j.find("text");
  if (id == j.end() || !id->is_string() || text == j.end() ||
      !text->is_string()) {
    throw ProtocolError("message needs string \"id\" and \"text\": " +
                        Excerpt(line));
  }
  auto decoded = DecodeUtf8(text->get_ref<const std::string&>());
  if (!decoded) throw ProtocolError("invalid UTF-8 in message text");
  return {id->get<std::string>(), *std::move(decoded)};
}

}  // namespace edacsc
