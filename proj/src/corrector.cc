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

#include "edacsc/corrector.h"

#include <string>
#include <unordered_map>

#include "edacsc/error.h"

namespace edacsc {

std::vector<CorrectorResponse> CorrectMessages(
    Corrector& corrector, const std::vector<CorrectorRequest>& requests) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (!index.emplace(requests[i].id, i).second) {
      throw UsageError("duplicate request id '" + requests[i].id +
                       "' in one batch");
    }
  }
  if (requests.empty()) return {};

  std::vector<CorrectorResponse> responses = corrector.Exchange(requests);
  if (responses.size() != requests.size()) {
    throw ProtocolError("expected " + std::to_string(requests.size()) +
                        " responses, got " + std::to_string(responses.size()));
  }
  std::vector<CorrectorResponse> ordered(requests.size());
  std::vector<bool> filled(requests.size(), false);
  for (auto& r : responses) {
    auto it = index.find(r.id);
    if (it == index.end()) {
      throw ProtocolError("response for unknown id '" + r.id + "'");
    }
    const std::size_t i = it->second;
    if (filled[i]) throw ProtocolError("duplicate response id '" + r.id + "'");
    if (r.text.size() != requests[i].text.size()) {
      throw ProtocolError("response '" + r.id + "' changes length (" +
                          std::to_string(requests[i].text.size()) + " -> " +
                          std::to_string(r.text.size()) + ")");
    }
    filled[i] = true;
    ordered[i] = std::move(r);
  }
  return ordered;
}

std::vector<Text> CorrectBatch(Corrector& corrector,
                               const std::vector<Text>& texts) {
  std::vector<CorrectorRequest> requests(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    requests[i] = {std::to_string(i), texts[i]};
  }
  auto responses = CorrectMessages(corrector, requests);
  std::vector<Text> out(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out[i] = std::move(responses[i].text);
  }
  return out;
}

}  // namespace edacsc
