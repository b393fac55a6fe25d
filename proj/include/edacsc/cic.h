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

#ifndef EDACSC_CIC_H_
#define EDACSC_CIC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "edacsc/corrector.h"
#include "edacsc/utf8.h"

namespace edacsc {

enum class NonConvergencePolicy {
  kAcceptLast,   // return the text of the final iteration
  kRevertCycle,  // return the first text of a detected cycle
};

NonConvergencePolicy ParseNonConvergencePolicy(std::string_view name);
std::string_view NonConvergencePolicyName(NonConvergencePolicy policy);

struct CicConfig {
  std::size_t max_iters = 3;
  // Edits whose positions are within this distance of each other (chained)
  // form one group; only the leftmost edit of a group is accepted per
  // iteration. 0 accepts every edit.
  std::size_t adjacency_window = 1;
  NonConvergencePolicy on_nonconvergence = NonConvergencePolicy::kAcceptLast;
};

void CheckCicConfig(const CicConfig& config);

struct CicIteration {
  std::vector<std::size_t> proposed;  // positions the corrector changed
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> deferred;
  Text text;  // accepted text after this iteration
};

struct CicResult {
  Text text;
  std::vector<CicIteration> trace;
  bool converged = false;  // last iteration proposed no edits
  bool cycle = false;      // an accepted text repeated an earlier one
  // Iteration whose output started the cycle (0 = the input text).
  std::size_t cycle_start = 0;
  bool reverted = false;  // text is the pre-cycle state

  std::size_t iterations() const { return trace.size(); }
};

struct EditPartition {
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> deferred;
};

// `edits` sorted ascending.
EditPartition PartitionEdits(const std::vector<std::size_t>& edits,
                             std::size_t window);

// Re-feeds the corrector its own output under the adjacency constraint until
// nothing is proposed or max_iters is reached.
CicResult CicApply(Corrector& corrector, const Text& text,
                   const CicConfig& config);

// Runs CicApply for many texts, sending every still-active text in one batch
// per iteration. Results equal per-text CicApply for any corrector whose
// answer depends only on the text.
std::vector<CicResult> CicApplyBatch(Corrector& corrector,
                                     const std::vector<Text>& texts,
                                     const CicConfig& config);

std::string CicTraceToJson(std::string_view id, const CicResult& result);

}  // namespace edacsc

#endif  // EDACSC_CIC_H_
