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

#include "edacsc/reduce.h"

#include <algorithm>
#include <string>

#include "edacsc/error.h"

namespace edacsc {
namespace {

bool AboveOriginCap(std::size_t k, const ReduceConfig& config) {
  return config.max_origin_typos && k > *config.max_origin_typos;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Appends all size-r combinations of `items` in lexicographic order.
void AppendCombinations(const ErrorPositions& items, std::size_t r,
                        std::vector<ErrorPositions>* out) {
  const std::size_t k = items.size();
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    ErrorPositions subset(r);
    for (std::size_t i = 0; i < r; ++i) subset[i] = items[idx[i]];
    out->push_back(std::move(subset));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == k - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void CheckReduceConfig(const ReduceConfig& config) {
  if (config.max_variant_typos < 1) {
    throw UsageError("max_variant_typos must be >= 1");
  }
}

std::vector<ErrorPositions> EnumerateVariants(const ErrorPositions& errors,
                                              const ReduceConfig& config) {
  CheckReduceConfig(config);
  const std::size_t k = errors.size();
  std::vector<ErrorPositions> out;
  if (AboveOriginCap(k, config)) {
    out.push_back(errors);
    return out;
  }
  const std::size_t max_size =
      k == 0 ? 0 : std::min(k - 1, config.max_variant_typos);
  for (std::size_t r = 1; r <= max_size; ++r) {
    AppendCombinations(errors, r, &out);
  }
  if (config.keep_original) out.push_back(errors);
  return out;
}

std::uint64_t VariantCount(std::size_t k, const ReduceConfig& config) {
  if (AboveOriginCap(k, config)) return 1;
  const std::size_t max_size =
      k == 0 ? 0 : std::min(k - 1, config.max_variant_typos);
  std::uint64_t n = config.keep_original ? 1 : 0;
  for (std::size_t r = 1; r <= max_size; ++r) n += Binomial(k, r);
  return n;
}

std::vector<AugmentedRecord> ReduceSample(const ParallelSample& sample,
                                          const ReduceConfig& config) {
  const ErrorPositions errors = DeriveErrors(sample);
  const std::vector<ErrorPositions> subsets = EnumerateVariants(errors, config);
  std::vector<AugmentedRecord> records;
  records.reserve(subsets.size());
  std::size_t generated = 0;
  for (const auto& retained : subsets) {
    AugmentedRecord record;
    record.method = AugmentMethod::kReduce;
    record.origin_id = sample.id;
    record.retained = retained;
    if (retained.size() == errors.size()) {
      record.sample = sample;
    } else {
      record.sample.id = sample.id + "#r" + std::to_string(generated++);
      record.sample.target = sample.target;
      record.sample.source = sample.target;
      for (std::size_t p : retained) {
        record.sample.source[p] = sample.source[p];
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

void ReduceSummary::Add(const ParallelSample& origin,
                        const std::vector<AugmentedRecord>& records,
                        const ReduceConfig& config) {
  DatasetStats before;
  before.Add(origin);
  input.Add(before);
  for (const auto& r : records) output.Add(r.sample);
  if (AboveOriginCap(before.errors, config)) {
    ++passed_through_cap;
  } else if (before.errors >= 2) {
    ++expanded_samples;
  }
}

ReduceCorpusResult ReduceCorpus(const std::vector<ParallelSample>& samples,
                                const ReduceConfig& config) {
  ReduceCorpusResult out;
  for (const auto& s : samples) {
    auto records = ReduceSample(s, config);
    out.summary.Add(s, records, config);
    for (auto& r : records) out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace edacsc
