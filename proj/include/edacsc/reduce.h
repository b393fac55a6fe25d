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

#ifndef EDACSC_REDUCE_H_
#define EDACSC_REDUCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "edacsc/corpus.h"
#include "edacsc/stats.h"

namespace edacsc {

struct ReduceConfig {
  std::size_t max_variant_typos = 2;
  bool keep_original = true;
  // Samples with more typos than this are passed through unexpanded.
  std::optional<std::size_t> max_origin_typos;
};

// Throws a usage Error if the config is unusable.
void CheckReduceConfig(const ReduceConfig& config);

// Retained-position subsets for a sample with the given typo positions:
// every subset R with 1 <= |R| <= min(k-1, max_variant_typos), ordered by
// size and then lexicographically, followed by the full set when
// keep_original is set. Pure enumeration.
std::vector<ErrorPositions> EnumerateVariants(const ErrorPositions& errors,
                                              const ReduceConfig& config);

// Number of records EnumerateVariants yields for k typos, without
// materializing them.
std::uint64_t VariantCount(std::size_t k, const ReduceConfig& config);

// Expands one valid sample. A variant keeps the typo character at retained
// positions and the target character elsewhere; its target is the original
// target. Generated variants are "<id>#r<j>"; the kept original keeps its id.
std::vector<AugmentedRecord> ReduceSample(const ParallelSample& sample,
                                          const ReduceConfig& config);

struct ReduceSummary {
  DatasetStats input;
  DatasetStats output;
  std::size_t expanded_samples = 0;    // samples that produced variants
  std::size_t passed_through_cap = 0;  // above max_origin_typos

  void Add(const ParallelSample& origin,
           const std::vector<AugmentedRecord>& records,
           const ReduceConfig& config);
};

struct ReduceCorpusResult {
  std::vector<AugmentedRecord> records;
  ReduceSummary summary;
};

ReduceCorpusResult ReduceCorpus(const std::vector<ParallelSample>& samples,
                                const ReduceConfig& config);

}  // namespace edacsc

#endif  // EDACSC_REDUCE_H_
