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

#include "edacsc/corpus.h"

#include <string>

#include "edacsc/error.h"

namespace edacsc {
namespace {

std::string MismatchDetail(const ParallelSample& sample) {
  return "length mismatch (" + std::to_string(sample.source.size()) + " vs " +
         std::to_string(sample.target.size()) + ")";
}

}  // namespace

ErrorPositions DeriveErrors(const ParallelSample& sample) {
  if (sample.source.size() != sample.target.size()) {
    throw ValidationError("sample '" + sample.id +
                          "': " + MismatchDetail(sample));
  }
  ErrorPositions positions;
  for (std::size_t j = 0; j < sample.source.size(); ++j) {
    if (sample.source[j] != sample.target[j]) positions.push_back(j);
  }
  return positions;
}

std::size_t CountErrors(const ParallelSample& sample) {
  if (sample.source.size() != sample.target.size()) {
    throw ValidationError("sample '" + sample.id +
                          "': " + MismatchDetail(sample));
  }
  std::size_t n = 0;
  for (std::size_t j = 0; j < sample.source.size(); ++j) {
    n += sample.source[j] != sample.target[j];
  }
  return n;
}

std::string_view AugmentMethodName(AugmentMethod method) {
  switch (method) {
    case AugmentMethod::kOriginal:
      return "original";
    case AugmentMethod::kSplit:
      return "split";
    case AugmentMethod::kReduce:
      return "reduce";
  }
  return "unknown";
}

AugmentedRecord MakeOriginalRecord(ParallelSample sample) {
  AugmentedRecord record;
  record.origin_id = sample.id;
  record.sample = std::move(sample);
  return record;
}

std::string_view ViolationReasonName(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::kLengthMismatch:
      return "length";
    case ViolationReason::kDuplicateId:
      return "duplicate-id";
    case ViolationReason::kEmptySentence:
      return "empty-sentence";
    case ViolationReason::kEmptyId:
      return "empty-id";
    case ViolationReason::kMalformed:
      return "malformed";
  }
  return "unknown";
}

std::optional<Violation> CheckSample(const ParallelSample& sample) {
  if (sample.id.empty()) {
    return Violation{0, sample.id, ViolationReason::kEmptyId, "empty id"};
  }
  if (sample.source.empty() || sample.target.empty()) {
    return Violation{0, sample.id, ViolationReason::kEmptySentence,
                     sample.source.empty() ? "empty source" : "empty target"};
  }
  if (sample.source.size() != sample.target.size()) {
    return Violation{0, sample.id, ViolationReason::kLengthMismatch,
                     MismatchDetail(sample)};
  }
  return std::nullopt;
}

void RequireValid(const ParallelSample& sample) {
  if (auto v = CheckSample(sample)) {
    throw ValidationError("sample '" + sample.id + "': " + v->detail);
  }
}

void CorpusValidator::Add(const ParallelSample& sample, std::size_t line) {
  auto violation = CheckSample(sample);
  // An empty id cannot collide meaningfully; skip the uniqueness check.
  if (!violation && !seen_ids_.insert(sample.id).second) {
    violation = Violation{0, sample.id, ViolationReason::kDuplicateId,
                          "duplicate id '" + sample.id + "'"};
  }
  if (violation) {
    violation->line = line;
    Record(*std::move(violation));
  } else {
    ++report_.valid;
  }
}

void CorpusValidator::AddMalformed(std::size_t line,
                                   const std::string& detail) {
  Record(Violation{line, "", ViolationReason::kMalformed, detail});
}

void CorpusValidator::Record(Violation v) {
  ++report_.invalid;
  ++report_.by_reason[v.reason];
  if (report_.violations.size() < max_violations_) {
    report_.violations.push_back(std::move(v));
  }
}

ValidationReport ValidateCorpus(const std::vector<ParallelSample>& samples,
                                std::size_t max_violations) {
  CorpusValidator validator(max_violations);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    validator.Add(samples[i], i + 1);
  }
  return validator.report();
}

}  // namespace edacsc
