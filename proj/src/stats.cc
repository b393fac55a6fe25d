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

#include "edacsc/stats.h"

namespace edacsc {

void DatasetStats::Add(const ParallelSample& sample) {
  errors += CountErrors(sample);
  chars += sample.source.size();
  ++sentences;
}

void DatasetStats::Add(const DatasetStats& other) {
  sentences += other.sentences;
  chars += other.chars;
  errors += other.errors;
}

double DatasetStats::avg_length() const {
  if (sentences == 0) return 0.0;
  return static_cast<double>(chars) / static_cast<double>(sentences);
}

double DatasetStats::rounded_avg_length() const {
  if (sentences == 0) return 0.0;
  // Integer half-up rounding of chars / sentences to tenths.
  const std::uint64_t tenths = (chars * 20 + sentences) / (2 * sentences);
  return static_cast<double>(tenths) / 10.0;
}

DatasetStats Combine(const DatasetStats& a, const DatasetStats& b) {
  DatasetStats out = a;
  out.Add(b);
  return out;
}

DatasetStats ComputeStats(const std::vector<ParallelSample>& samples) {
  DatasetStats stats;
  for (const auto& s : samples) stats.Add(s);
  return stats;
}

}  // namespace edacsc
