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

#ifndef EDACSC_MOCK_CORRECTOR_H_
#define EDACSC_MOCK_CORRECTOR_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "edacsc/corrector.h"
#include "edacsc/utf8.h"

namespace edacsc {

// Deterministic corrector for tests and calibration.
//
// Every character found in `substitutions` is replaced by its mapping (up to
// `max_substitutions_per_call` per text, leftmost first; 0 means no limit).
// Independently, each clean character (not a substitution key) that is in
// `overcorrection_pool` is replaced, with probability `overcorrection_rate`,
// by another pool character. The random stream depends only on `seed` and the
// input text.
struct MockCorrectorSpec {
  std::map<char32_t, char32_t> substitutions;
  double overcorrection_rate = 0.0;
  std::uint64_t seed = 0;
  Text overcorrection_pool;
  std::size_t max_substitutions_per_call = 0;
};

// JSON form:
//   {"substitutions": {"X": "b"}, "overcorrection_rate": 0.1, "seed": 42,
//    "overcorrection_pool": "abc", "max_substitutions_per_call": 0}
// All fields are optional. Throws a validation Error on bad input.
MockCorrectorSpec ParseMockSpec(std::string_view json_text);
MockCorrectorSpec LoadMockSpec(const std::string& path);

Text RunMock(const MockCorrectorSpec& spec, std::u32string_view text);

class MockCorrector : public Corrector {
 public:
  explicit MockCorrector(MockCorrectorSpec spec);

  std::vector<CorrectorResponse> Exchange(
      const std::vector<CorrectorRequest>& requests) override;

 private:
  MockCorrectorSpec spec_;
};

// Child side of the line protocol: handshake, then one response per request
// until end of input. Returns a process exit code.
int ServeCorrector(Corrector& corrector, std::istream& in, std::ostream& out,
                   std::ostream& err);

}  // namespace edacsc

#endif  // EDACSC_MOCK_CORRECTOR_H_
