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

#ifndef EDACSC_STATS_H_
#define EDACSC_STATS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edacsc/corpus.h"

namespace edacsc {

// Corpus statistics: sentence count, mean source length and typo total.
// Exact integer totals are kept; the mean is derived. Combining is
// commutative and associative, so partial stats may be folded in any order.
struct DatasetStats {
  std::uint64_t sentences = 0;
  std::uint64_t chars = 0;   // total source characters
  std::uint64_t errors = 0;  // total differing positions

  void Add(const ParallelSample& sample);
  void Add(const DatasetStats& other);

  bool empty() const { return sentences == 0; }
  // Exact mean; 0 for an empty corpus.
  double avg_length() const;
  // Mean rounded half-up to one decimal.
  double rounded_avg_length() const;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats Combine(const DatasetStats& a, const DatasetStats& b);
DatasetStats ComputeStats(const std::vector<ParallelSample>& samples);

}  // namespace edacsc

#endif  // EDACSC_STATS_H_
