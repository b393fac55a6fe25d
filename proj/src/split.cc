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

#include "edacsc/split.h"

#include <algorithm>
#include <string>
#include <utility>

#include "edacsc/error.h"

namespace edacsc {
namespace {

struct Span {
  std::size_t begin;
  std::size_t end;
  std::size_t size() const { return end - begin; }
};

Span Join(Span a, Span b) { return {a.begin, b.end}; }

std::vector<Span> MergeShort(const std::vector<Span>& spans,
                             std::size_t min_chars) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < spans.size()) {
    Span cur = spans[i++];
    while (cur.size() < min_chars && i < spans.size()) {
      cur = Join(cur, spans[i++]);
    }
    out.push_back(cur);
  }
  if (out.size() > 1 && out.back().size() < min_chars) {
    out[out.size() - 2] = Join(out[out.size() - 2], out.back());
    out.pop_back();
  }
  return out;
}

}  // namespace

DelimiterTypoPolicy ParseDelimiterTypoPolicy(std::string_view name) {
  if (name == "skip") return DelimiterTypoPolicy::kSkipSplit;
  if (name == "reject") return DelimiterTypoPolicy::kRejectSample;
  throw UsageError("unknown delimiter-typo policy '" + std::string(name) +
                   "' (expected skip or reject)");
}

std::vector<Text> DefaultDelimiters() {
  return {U"。",     U"！",  U"？", U"，", U"……", U"…",
          U"......", U"...", U",",  U".",  U"!",  U"?"};
}

DelimiterMatcher::DelimiterMatcher(std::vector<Text> delimiters)
    : delimiters_(std::move(delimiters)) {
  if (delimiters_.empty()) throw UsageError("delimiter set is empty");
  for (const auto& d : delimiters_) {
    if (d.empty()) throw UsageError("empty delimiter");
  }
  std::sort(delimiters_.begin(), delimiters_.end(),
            [](const Text& a, const Text& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  delimiters_.erase(std::unique(delimiters_.begin(), delimiters_.end()),
                    delimiters_.end());
}

std::size_t DelimiterMatcher::MatchAt(std::u32string_view text,
                                      std::size_t pos) const {
  const std::u32string_view rest = text.substr(pos);
  for (const auto& d : delimiters_) {
    if (rest.starts_with(d)) return d.size();
  }
  return 0;
}

SplitAugmenter::SplitAugmenter(SplitConfig config)
    : config_(std::move(config)), matcher_(config_.delimiters) {}

SplitResult SplitAugmenter::Split(const ParallelSample& sample) const {
  const ErrorPositions errors = DeriveErrors(sample);
  const std::u32string_view source = sample.source;
  const std::u32string_view target = sample.target;
  const std::size_t n = target.size();

  SplitResult result;
  std::vector<Span> spans;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t len = matcher_.MatchAt(target, i);
    if (len == 0) {
      ++i;
      continue;
    }
    if (source.substr(i, len) != target.substr(i, len)) {
      ++result.suppressed_points;
      if (config_.on_delimiter_typo == DelimiterTypoPolicy::kRejectSample) {
        result.rejected = true;
        return result;
      }
    } else if (config_.attach_delimiter) {
      spans.push_back({start, i + len});
      start = i + len;
    } else {
      if (i > start) spans.push_back({start, i});
      start = i + len;
    }
    i += len;
  }
  if (start < n) spans.push_back({start, n});

  spans = MergeShort(spans, config_.min_segment_chars);

  auto err = errors.begin();
  for (std::size_t k = 0; k < spans.size(); ++k) {
    const Span span = spans[k];
    AugmentedRecord record;
    record.method = AugmentMethod::kSplit;
    record.origin_id = sample.id;
    record.segment_index = k;
    record.sample.id = sample.id + "#s" + std::to_string(k);
    record.sample.source = Text(source.substr(span.begin, span.size()));
    record.sample.target = Text(target.substr(span.begin, span.size()));
    while (err != errors.end() && *err < span.begin) ++err;
    const bool has_error = err != errors.end() && *err < span.end;
    if (!has_error && !config_.emit_error_free_segments) continue;
    result.records.push_back(std::move(record));
  }
  return result;
}

void SplitSummary::Add(const ParallelSample& origin,
                       const SplitResult& result) {
  input.Add(origin);
  for (const auto& r : result.records) output.Add(r.sample);
  suppressed_points += result.suppressed_points;
  samples_with_suppression += result.suppressed_points > 0;
  rejected_samples += result.rejected;
}

SplitCorpusResult SplitCorpus(const std::vector<ParallelSample>& samples,
                              const SplitConfig& config) {
  const SplitAugmenter augmenter(config);
  SplitCorpusResult out;
  for (const auto& s : samples) {
    SplitResult r = augmenter.Split(s);
    out.summary.Add(s, r);
    for (auto& rec : r.records) out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace edacsc
