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

#include "edacsc/dataset.h"

#include "edacsc/utf8.h"

namespace edacsc {

ParallelSample NamespaceId(ParallelSample sample, MergeSide side,
                           const std::unordered_set<std::string>& collisions) {
  if (collisions.count(sample.id)) {
    sample.id = (side == MergeSide::kA ? "A:" : "B:") + sample.id;
  }
  return sample;
}

bool Deduplicator::Admit(const ParallelSample& sample) {
  std::string key = EncodeUtf8(sample.source);
  key += '\0';
  key += EncodeUtf8(sample.target);
  if (seen_.insert(std::move(key)).second) return true;
  ++dropped_;
  return false;
}

MergeResult Merge(const std::vector<ParallelSample>& a,
                  const std::vector<ParallelSample>& b, MergeOptions options) {
  IdCollisionFinder finder;
  for (const auto& s : a) finder.AddA(s.id);
  for (const auto& s : b) finder.AddB(s.id);
  const auto collisions = finder.TakeCollisions();

  MergeResult result;
  Deduplicator dedup;
  auto emit = [&](const ParallelSample& s, MergeSide side) {
    if (options.dedup && !dedup.Admit(s)) return;
    result.namespaced_ids += collisions.count(s.id);
    result.records.push_back(NamespaceId(s, side, collisions));
    result.stats.Add(result.records.back());
  };
  for (const auto& s : a) emit(s, MergeSide::kA);
  for (const auto& s : b) emit(s, MergeSide::kB);
  result.deduplicated = dedup.dropped();
  return result;
}

MergeFileSummary MergeFiles(const std::string& path_a, ReadOptions read_a,
                            const std::string& path_b, ReadOptions read_b,
                            CorpusWriter* out, MergeOptions options) {
  IdCollisionFinder finder;
  {
    CorpusReader reader(path_a, read_a);
    while (auto s = reader.Next()) finder.AddA(s->id);
  }
  {
    CorpusReader reader(path_b, read_b);
    while (auto s = reader.Next()) finder.AddB(s->id);
  }
  const auto collisions = finder.TakeCollisions();

  MergeFileSummary summary;
  Deduplicator dedup;
  auto copy = [&](const std::string& path, ReadOptions read, MergeSide side) {
    CorpusReader reader(path, read);
    while (auto s = reader.Next()) {
      RequireValid(*s);
      if (options.dedup && !dedup.Admit(*s)) continue;
      summary.namespaced_ids += collisions.count(s->id);
      ParallelSample tagged = NamespaceId(*std::move(s), side, collisions);
      summary.stats.Add(tagged);
      out->Write(tagged);
    }
  };
  copy(path_a, read_a, MergeSide::kA);
  copy(path_b, read_b, MergeSide::kB);
  summary.deduplicated = dedup.dropped();
  return summary;
}

}  // namespace edacsc
