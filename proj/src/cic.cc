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

#include "edacsc/cic.h"

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

// Per-text loop state.
struct CicState {
  std::vector<Text> history;  // history[i] = accepted text after iteration i
  CicResult result;
  bool active = true;
};

void Step(CicState* state, const Text& candidate, const CicConfig& config) {
  const Text& current = state->history.back();
  CicIteration it;
  for (std::size_t j = 0; j < current.size(); ++j) {
    if (candidate[j] != current[j]) it.proposed.push_back(j);
  }
  auto parts = PartitionEdits(it.proposed, config.adjacency_window);
  it.accepted = std::move(parts.accepted);
  it.deferred = std::move(parts.deferred);
  it.text = current;
  for (std::size_t j : it.accepted) it.text[j] = candidate[j];

  CicResult& r = state->result;
  if (it.proposed.empty()) {
    r.converged = true;
    state->active = false;
  } else if (!r.cycle) {
    for (std::size_t k = 0; k < state->history.size(); ++k) {
      if (state->history[k] == it.text) {
        r.cycle = true;
        r.cycle_start = k;
        break;
      }
    }
  }
  state->history.push_back(it.text);
  r.trace.push_back(std::move(it));
  if (r.trace.size() >= config.max_iters) state->active = false;
}

void Finish(CicState* state, const CicConfig& config) {
  CicResult& r = state->result;
  r.text = state->history.back();
  if (!r.converged && r.cycle &&
      config.on_nonconvergence == NonConvergencePolicy::kRevertCycle) {
    r.text = state->history[r.cycle_start];
    r.reverted = true;
  }
}

}  // namespace

NonConvergencePolicy ParseNonConvergencePolicy(std::string_view name) {
  if (name == "accept_last") return NonConvergencePolicy::kAcceptLast;
  if (name == "revert_cycle") return NonConvergencePolicy::kRevertCycle;
  throw UsageError("unknown non-convergence policy '" + std::string(name) +
                   "' (expected accept_last or revert_cycle)");
}

std::string_view NonConvergencePolicyName(NonConvergencePolicy policy) {
  return policy == NonConvergencePolicy::kAcceptLast ? "accept_last"
                                                     : "revert_cycle";
}

void CheckCicConfig(const CicConfig& config) {
  if (config.max_iters < 1) throw UsageError("max_iters must be >= 1");
}

EditPartition PartitionEdits(const std::vector<std::size_t>& edits,
                             std::size_t window) {
  EditPartition parts;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const bool joins_group =
        window > 0 && i > 0 && edits[i] - edits[i - 1] <= window;
    (joins_group ? parts.deferred : parts.accepted).push_back(edits[i]);
  }
  return parts;
}

CicResult CicApply(Corrector& corrector, const Text& text,
                   const CicConfig& config) {
  return std::move(CicApplyBatch(corrector, {text}, config).front());
}

std::vector<CicResult> CicApplyBatch(Corrector& corrector,
                                     const std::vector<Text>& texts,
                                     const CicConfig& config) {
  CheckCicConfig(config);
  std::vector<CicState> states(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    states[i].history.push_back(texts[i]);
  }
  while (true) {
    std::vector<std::size_t> active;
    std::vector<Text> batch;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].active) {
        active.push_back(i);
        batch.push_back(states[i].history.back());
      }
    }
    if (active.empty()) break;
    const auto candidates = CorrectBatch(corrector, batch);
    for (std::size_t k = 0; k < active.size(); ++k) {
      Step(&states[active[k]], candidates[k], config);
    }
  }
  std::vector<CicResult> results;
  results.reserve(states.size());
  for (auto& s : states) {
    Finish(&s, config);
    results.push_back(std::move(s.result));
  }
  return results;
}

std::string CicTraceToJson(std::string_view id, const CicResult& result) {
  nlohmann::ordered_json j;
  j["id"] = std::string(id);
  j["iterations"] = result.iterations();
  j["converged"] = result.converged;
  j["cycle"] = result.cycle;
  if (result.cycle) j["cycle_start"] = result.cycle_start;
  j["reverted"] = result.reverted;
  auto& steps = j["trace"] = nlohmann::ordered_json::array();
  for (const auto& it : result.trace) {
    nlohmann::ordered_json s;
    s["proposed"] = it.proposed;
    s["accepted"] = it.accepted;
    s["deferred"] = it.deferred;
    s["text"] = EncodeUtf8(it.text);
    steps.push_back(std::move(s));
  }
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

}  // namespace edacsc
