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

#ifndef EDACSC_SPLIT_H_
#define EDACSC_SPLIT_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "edacsc/corpus.h"
#include "edacsc/stats.h"
#include "edacsc/utf8.h"

namespace edacsc {

// What to do when the source and target disagree inside a delimiter span.
enum class DelimiterTypoPolicy {
  kSkipSplit,     // keep the sample, do not cut at that delimiter
  kRejectSample,  // drop the whole sample
};

DelimiterTypoPolicy ParseDelimiterTypoPolicy(std::string_view name);

// Full-width and ASCII sentence punctuation, including ellipsis runs.
std::vector<Text> DefaultDelimiters();

struct SplitConfig {
  std::vector<Text> delimiters = DefaultDelimiters();
  // true: the delimiter ends the preceding segment. false: delimiter spans
  // are dropped from the output segments.
  bool attach_delimiter = true;
  // Segments shorter than this merge into the following segment; a short
  // trailing segment merges backward.
  std::size_t min_segment_chars = 2;
  bool emit_error_free_segments = true;
  DelimiterTypoPolicy on_delimiter_typo = DelimiterTypoPolicy::kSkipSplit;
};

struct SplitResult {
  std::vector<AugmentedRecord> records;
  std::size_t suppressed_points = 0;
  bool rejected = false;
};

// Longest-match-first delimiter lookup, built once per config.
class DelimiterMatcher {
 public:
  explicit DelimiterMatcher(std::vector<Text> delimiters);
  // Length of the longest delimiter matching text at `pos`, or 0.
  std::size_t MatchAt(std::u32string_view text, std::size_t pos) const;

 private:
  std::vector<Text> delimiters_;  // sorted longest first
};

class SplitAugmenter {
 public:
  explicit SplitAugmenter(SplitConfig config);

  // Splits one valid sample. Delimiters are matched on the target side.
  // Output ids are "<id>#s<k>".
  SplitResult Split(const ParallelSample& sample) const;

  const SplitConfig& config() const { return config_; }

 private:
  SplitConfig config_;
  DelimiterMatcher matcher_;
};

// Running totals over a split run.
struct SplitSummary {
  DatasetStats input;
  DatasetStats output;
  std::size_t suppressed_points = 0;
  std::size_t samples_with_suppression = 0;
  std::size_t rejected_samples = 0;

  void Add(const ParallelSample& origin, const SplitResult& result);
  // Input typos that do not appear in the output.
  std::int64_t error_discrepancy() const {
    return static_cast<std::int64_t>(input.errors) -
           static_cast<std::int64_t>(output.errors);
  }
};

struct SplitCorpusResult {
  std::vector<AugmentedRecord> records;
  SplitSummary summary;
};

SplitCorpusResult SplitCorpus(const std::vector<ParallelSample>& samples,
                              const SplitConfig& config);

}  // namespace edacsc

#endif  // EDACSC_SPLIT_H_
