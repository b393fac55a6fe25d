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

#ifndef EDACSC_PROTOCOL_H_
#define EDACSC_PROTOCOL_H_

#include <string>
#include <string_view>

#include "edacsc/utf8.h"

namespace edacsc {

// Line-delimited JSON spoken with an external corrector over its standard
// input/output. Each side first sends the handshake line, then the parent
// sends {"id":...,"text":...} requests and the child answers each with a
// line of the same shape whose text has the same character count.
inline constexpr std::string_view kProtocolName = "edacsc-corrector";
inline constexpr int kProtocolVersion = 1;

// {"protocol":"edacsc-corrector","version":1}
std::string HandshakeLine();
// Throws a protocol Error unless `line` is a matching handshake.
void CheckHandshake(std::string_view line);

struct CorrectorMessage {
  std::string id;
  Text text;

  friend bool operator==(const CorrectorMessage&,
                         const CorrectorMessage&) = default;
};

using CorrectorRequest = CorrectorMessage;
using CorrectorResponse = CorrectorMessage;

// No trailing newline.
std::string FormatMessage(const CorrectorMessage& message);
// Throws a protocol Error on malformed input.
CorrectorMessage ParseMessage(std::string_view line);

}  // namespace edacsc

#endif  // EDACSC_PROTOCOL_H_
