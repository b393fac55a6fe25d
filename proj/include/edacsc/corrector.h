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

#ifndef EDACSC_CORRECTOR_H_
#define EDACSC_CORRECTOR_H_

#include <vector>

#include "edacsc/protocol.h"
#include "edacsc/utf8.h"

namespace edacsc {

// Anything that answers correction requests. Implementations may return
// responses in any order; CorrectMessages validates and reorders them.
class Corrector {
 public:
  virtual ~Corrector() = default;
  virtual std::vector<CorrectorResponse> Exchange(
      const std::vector<CorrectorRequest>& requests) = 0;
};

class EchoCorrector : public Corrector {
 public:
  std::vector<CorrectorResponse> Exchange(
      const std::vector<CorrectorRequest>& requests) override {
    return requests;
  }
};

// Sends one batch and returns responses in request order. Throws a protocol
// Error on a missing, duplicate or unknown response id, or a response whose
// length differs from its request. Request ids must be unique.
std::vector<CorrectorResponse> CorrectMessages(
    Corrector& corrector, const std::vector<CorrectorRequest>& requests);

// Same, with ids assigned from batch positions.
std::vector<Text> CorrectBatch(Corrector& corrector,
                               const std::vector<Text>& texts);

}  // namespace edacsc

#endif  // EDACSC_CORRECTOR_H_
