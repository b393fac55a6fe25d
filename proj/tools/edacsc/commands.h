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

#ifndef EDACSC_TOOLS_COMMANDS_H_
#define EDACSC_TOOLS_COMMANDS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace edacsc {

struct InputOptions {
  std::string path;
  std::string format;  // empty: from the file extension
  bool lenient = false;
};

struct ValidateOptions {
  InputOptions in;
  std::size_t max_violations = 20;
};

struct SplitOptions {
  InputOptions in;
  std::string out;
  std::string out_format;
  std::string delims_file;
  std::size_t min_seg = 2;
  bool keep_error_free = true;
  bool attach_delimiter = true;
  std::string on_delim_typo = "skip";
  std::string provenance;
  unsigned threads = 0;
};

struct ReduceOptions {
  InputOptions in;
  std::string out;
  std::string out_format;
  std::size_t max_typos = 2;
  bool keep_original = true;
  std::optional<std::size_t> max_origin_typos;
  std::string provenance;
  unsigned threads = 0;
};

struct MergeOptionsCli {
  std::vector<std::string> inputs;  // exactly two
  std::string format;
  bool lenient = false;
  std::string out;
  std::string out_format;
  bool dedup = false;
};

struct StatsOptions {
  InputOptions in;
  unsigned threads = 0;
};

struct ScheduleOptions {
  std::string procedure;
  std::string train;
  std::string short_data;
  std::string reduce;
  std::string merge;
  std::string first;
  std::string second;
  std::string out;  // empty: schedule_<procedure>.json
};

struct CorrectOptions {
  InputOptions in;
  std::string out;
  std::string cmd;
  std::string mock_spec;  // in-process mock instead of --cmd
  bool cic = false;
  std::size_t max_iters = 3;
  std::size_t window = 1;
  std::string on_nonconvergence = "accept_last";
  std::string trace;
  std::size_t batch_size = 256;
  double timeout_s = 60.0;
  unsigned threads = 1;
};

struct MockServeOptions {
  std::string spec;
};

struct EvalOptions {
  std::string gold;
  std::string gold_format;
  std::string pred;
  std::string aux;
  std::string report_format = "json";
  std::string out;  // empty: standard output
};

// Each returns a process exit code and throws edacsc::Error on failure.
int RunValidate(const ValidateOptions& options);
int RunSplit(const SplitOptions& options);
int RunReduce(const ReduceOptions& options);
int RunMerge(const MergeOptionsCli& options);
int RunStats(const StatsOptions& options);
int RunSchedule(const ScheduleOptions& options);
int RunCorrect(const CorrectOptions& options);
int RunMockCorrector(const MockServeOptions& options);
int RunEval(const EvalOptions& options);

}  // namespace edacsc

#endif  // EDACSC_TOOLS_COMMANDS_H_
