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

#ifndef EDACSC_PROCESS_CORRECTOR_H_
#define EDACSC_PROCESS_CORRECTOR_H_

#include <sys/types.h>

#include <chrono>
#include <string>
#include <vector>

#include "edacsc/corrector.h"

namespace edacsc {

struct ProcessOptions {
  // Applies to the handshake and to each Exchange call as a whole.
  std::chrono::milliseconds timeout{60000};
};

// Runs `command` through /bin/sh and speaks the line protocol with it. The
// child inherits standard error. Transport failures (exit, timeout, broken
// pipe) are reported as protocol Errors.
class ProcessCorrector : public Corrector {
 public:
  explicit ProcessCorrector(const std::string& command,
                            ProcessOptions options = {});
  ~ProcessCorrector() override;

  ProcessCorrector(const ProcessCorrector&) = delete;
  ProcessCorrector& operator=(const ProcessCorrector&) = delete;

  std::vector<CorrectorResponse> Exchange(
      const std::vector<CorrectorRequest>& requests) override;

  pid_t pid() const { return pid_; }

 private:
  using Clock = std::chrono::steady_clock;

  // Writes `out` while collecting `lines_wanted` complete lines from the
  // child, all before `deadline`.
  std::vector<std::string> Transfer(const std::string& out,
                                    std::size_t lines_wanted,
                                    Clock::time_point deadline);
  [[noreturn]] void Fail(const std::string& what);
  void Shutdown();

  std::string command_;
  ProcessOptions options_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;  // bytes read past the last complete line
};

}  // namespace edacsc

#endif  // EDACSC_PROCESS_CORRECTOR_H_
