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

#include "edacsc/schedule.h"

#include "edacsc/error.h"
#include "json.hpp"

namespace edacsc {
namespace {

using nlohmann::ordered_json;

enum class Slot { kTrain, kShort, kReduce, kMerge };

const std::string& Require(const DatasetPaths& paths, Slot slot,
                           std::string_view procedure) {
  const std::optional<std::string>* path = nullptr;
  const char* flag = "";
  switch (slot) {
    case Slot::kTrain:
      path = &paths.train;
      flag = "--train";
      break;
    case Slot::kShort:
      path = &paths.short_data;
      flag = "--short";
      break;
    case Slot::kReduce:
      path = &paths.reduce;
      flag = "--reduce";
      break;
    case Slot::kMerge:
      path = &paths.merge;
      flag = "--merge";
      break;
  }
  if (!*path || (*path)->empty()) {
    throw UsageError("procedure " + std::string(procedure) + " requires " +
                     flag);
  }
  return **path;
}

}  // namespace

std::string_view InitPolicyName(InitPolicy policy) {
  return policy == InitPolicy::kFresh ? "fresh" : "best_of_previous";
}

ScheduleManifest MakeSchedule(std::string_view procedure,
                              const DatasetPaths& paths) {
  std::vector<Slot> slots;
  if (procedure == "a") {
    slots = {Slot::kTrain};
  } else if (procedure == "b") {
    slots = {Slot::kShort};
  } else if (procedure == "c") {
    slots = {Slot::kReduce};
  } else if (procedure == "d") {
    slots = {Slot::kMerge};
  } else if (procedure == "e") {
    slots = {Slot::kTrain, Slot::kShort};
  } else if (procedure == "f") {
    slots = {Slot::kShort, Slot::kReduce};
  } else if (procedure == "g") {
    slots = {Slot::kReduce, Slot::kShort};
  } else {
    throw UsageError("unknown procedure '" + std::string(procedure) +
                     "' (expected a-g or custom)");
  }
  ScheduleManifest manifest;
  manifest.name = std::string(procedure);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    manifest.stages.push_back(
        {Require(paths, slots[i], procedure),
         i == 0 ? InitPolicy::kFresh : InitPolicy::kBestOfPrevious});
  }
  return manifest;
}

ScheduleManifest MakeCustomSchedule(const std::string& first,
                                    const std::string& second) {
  if (first.empty() || second.empty()) {
    throw UsageError("custom procedure requires --first and --second");
  }
  return {"custom",
          {{first, InitPolicy::kFresh}, {second, InitPolicy::kBestOfPrevious}}};
}

std::string ManifestToJson(const ScheduleManifest& manifest) {
  ordered_json j;
  j["name"] = manifest.name;
  j["stages"] = ordered_json::array();
  for (const auto& stage : manifest.stages) {
    ordered_json s;
    s["dataset"] = stage.dataset;
    s["init"] = std::string(InitPolicyName(stage.init));
    j["stages"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

ScheduleManifest ParseManifest(std::string_view json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    ScheduleManifest manifest;
    manifest.name = j.at("name").get<std::string>();
    for (const auto& s : j.at("stages")) {
      const auto init = s.at("init").get<std::string>();
      InitPolicy policy;
      if (init == "fresh") {
        policy = InitPolicy::kFresh;
      } else if (init == "best_of_previous") {
        policy = InitPolicy::kBestOfPrevious;
      } else {
        throw ValidationError("unknown init policy '" + init + "'");
      }
      manifest.stages.push_back({s.at("dataset").get<std::string>(), policy});
    }
    return manifest;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid manifest: ") + e.what());
  }
}

}  // namespace edacsc
