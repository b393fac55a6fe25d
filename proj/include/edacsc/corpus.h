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

#ifndef EDACSC_CORPUS_H_
#define EDACSC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "edacsc/utf8.h"

namespace edacsc {

// One aligned (source, target) sentence pair. Spelling correction is
// substitution-only, so a valid sample has source.size() == target.size().
struct ParallelSample {
  std::string id;
  Text source;
  Text target;

  friend bool operator==(const ParallelSample&,
                         const ParallelSample&) = default;
};

// Sorted, zero-based character positions where source differs from target.
using ErrorPositions = std::vector<std::size_t>;

// Throws a validation Error on length mismatch.
ErrorPositions DeriveErrors(const ParallelSample& sample);

// Number of differing positions; same precondition as DeriveErrors.
std::size_t CountErrors(const ParallelSample& sample);

enum class AugmentMethod { kOriginal, kSplit, kReduce };

std::string_view AugmentMethodName(AugmentMethod method);

// A sample together with where it came from. `segment_index` is meaningful
// for kSplit, `retained` (origin coordinates) for kReduce.
struct AugmentedRecord {
  ParallelSample sample;
  std::string origin_id;
  AugmentMethod method = AugmentMethod::kOriginal;
  std::size_t segment_index = 0;
  ErrorPositions retained;
};

AugmentedRecord MakeOriginalRecord(ParallelSample sample);

enum class ViolationReason {
  kLengthMismatch,
  kDuplicateId,
  kEmptySentence,
  kEmptyId,
  kMalformed,
};

std::string_view ViolationReasonName(ViolationReason reason);

struct Violation {
  std::size_t line = 0;  // 1-based line in the input, 0 if unknown
  std::string id;
  ViolationReason reason;
  std::string detail;
};

// Checks a single sample in isolation (everything except id uniqueness).
std::optional<Violation> CheckSample(const ParallelSample& sample);

// Throws a validation Error describing the first problem, if any.
void RequireValid(const ParallelSample& sample);

struct ValidationReport {
  std::size_t valid = 0;
  std::size_t invalid = 0;
  std::map<ViolationReason, std::size_t> by_reason;
  std::vector<Violation> violations;  // first `max_violations` only
};

// Accumulates a validation report over a stream of records. Never throws on
// bad records; they are counted instead.
class CorpusValidator {
 public:
  explicit CorpusValidator(std::size_t max_violations = 20)
      : max_violations_(max_violations) {}

  void Add(const ParallelSample& sample, std::size_t line = 0);
  void AddMalformed(std::size_t line, const std::string& detail);

  const ValidationReport& report() const { return report_; }

 private:
  void Record(Violation v);

  std::size_t max_violations_;
  std::unordered_set<std::string> seen_ids_;
  ValidationReport report_;
};

ValidationReport ValidateCorpus(const std::vector<ParallelSample>& samples,
                                std::size_t max_violations = 20);

}  // namespace edacsc

#endif  // EDACSC_CORPUS_H_
