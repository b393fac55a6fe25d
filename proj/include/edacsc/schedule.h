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

#ifndef EDACSC_SCHEDULE_H_
#define EDACSC_SCHEDULE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edacsc {

// How the trainer initializes before a stage: from the base model, or from
// the best checkpoint of the previous stage.
enum class InitPolicy { kFresh, kBestOfPrevious };

std::string_view InitPolicyName(InitPolicy policy);

struct ScheduleStage {
  std::string dataset;
  InitPolicy init = InitPolicy::kFresh;

  friend bool operator==(const ScheduleStage&, const ScheduleStage&) = default;
};

// Training procedure handed to an external trainer. Procedures a-d train on
// one dataset; e-g train on a first dataset and continue from its best
// weights on a second.
struct ScheduleManifest {
  std::string name;
  std::vector<ScheduleStage> stages;

  friend bool operator==(const ScheduleManifest&,
                         const ScheduleManifest&) = default;
};

struct DatasetPaths {
  std::optional<std::string> train;
  std::optional<std::string> short_data;
  std::optional<std::string> reduce;
  std::optional<std::string> merge;
};

//   a: train                 e: train  -> short
//   b: short                 f: short  -> reduce
//   c: reduce                g: reduce -> short
//   d: merge
// Throws a usage Error for an unknown procedure or a missing path.
ScheduleManifest MakeSchedule(std::string_view procedure,
                              const DatasetPaths& paths);

// Free-form two-stage procedure, named "custom".
ScheduleManifest MakeCustomSchedule(const std::string& first,
                                    const std::string& second);

std::string ManifestToJson(const ScheduleManifest& manifest);
ScheduleManifest ParseManifest(std::string_view json_text);

}  // namespace edacsc

#endif  // EDACSC_SCHEDULE_H_
