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

#ifndef EDACSC_DATASET_H_
#define EDACSC_DATASET_H_

#include <string>
#include <unordered_set>
#include <vector>

#include "edacsc/corpus.h"
#include "edacsc/corpus_io.h"
#include "edacsc/stats.h"

namespace edacsc {

enum class MergeSide { kA, kB };

// Finds ids that occur in both merge inputs. All ids of A must be added
// before any id of B.
class IdCollisionFinder {
 public:
  void AddA(const std::string& id) { a_ids_.insert(id); }
  void AddB(const std::string& id) {
    if (a_ids_.count(id)) collisions_.insert(id);
  }
  std::unordered_set<std::string> TakeCollisions() {
    a_ids_.clear();
    return std::move(collisions_);
  }

 private:
  std::unordered_set<std::string> a_ids_;
  std::unordered_set<std::string> collisions_;
};

// Prefixes "A:" or "B:" to ids listed in `collisions`; other ids pass
// through unchanged.
ParallelSample NamespaceId(ParallelSample sample, MergeSide side,
                           const std::unordered_set<std::string>& collisions);

// Drops exact repeats of a (source, target) pair. Not part of merge unless
// asked for.
class Deduplicator {
 public:
  // True the first time a pair is seen.
  bool Admit(const ParallelSample& sample);
  std::size_t dropped() const { return dropped_; }

 private:
  std::unordered_set<std::string> seen_;
  std::size_t dropped_ = 0;
};

struct MergeOptions {
  bool dedup = false;
};

struct MergeResult {
  std::vector<ParallelSample> records;
  DatasetStats stats;
  std::size_t namespaced_ids = 0;
  std::size_t deduplicated = 0;
};

// Concatenation a then b.
MergeResult Merge(const std::vector<ParallelSample>& a,
                  const std::vector<ParallelSample>& b,
                  MergeOptions options = {});

struct MergeFileSummary {
  DatasetStats stats;
  std::size_t namespaced_ids = 0;
  std::size_t deduplicated = 0;
};

// Streaming merge of two corpus files: one pass over ids, one over records.
MergeFileSummary MergeFiles(const std::string& path_a, ReadOptions read_a,
                            const std::string& path_b, ReadOptions read_b,
                            CorpusWriter* out, MergeOptions options = {});

}  // namespace edacsc

#endif  // EDACSC_DATASET_H_
