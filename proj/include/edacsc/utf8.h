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

#ifndef EDACSC_UTF8_H_
#define EDACSC_UTF8_H_

#include <optional>
#include <string>
#include <string_view>

namespace edacsc {

// A sentence is a sequence of Unicode scalar values. Indices into a Text are
// character positions.
using Text = std::u32string;

// Decodes UTF-8. Rejects overlong forms, surrogates and values above
// U+10FFFF. Returns nullopt on malformed input.
std::optional<Text> DecodeUtf8(std::string_view bytes);

// Like DecodeUtf8 but throws a validation Error naming `what`.
Text DecodeUtf8OrThrow(std::string_view bytes, std::string_view what);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

bool IsScalarValue(char32_t c);

}  // namespace edacsc

#endif  // EDACSC_UTF8_H_
