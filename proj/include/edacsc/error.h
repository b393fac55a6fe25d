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

#ifndef EDACSC_ERROR_H_
#define EDACSC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace edacsc {

// Failure classes. The numeric values are the CLI exit codes.
enum class ErrorKind {
  kUsage = 2,
  kValidation = 3,
  kProtocol = 4,
  kIo = 5,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error UsageError(const std::string& msg) {
  return Error(ErrorKind::kUsage, msg);
}
inline Error ValidationError(const std::string& msg) {
  return Error(ErrorKind::kValidation, msg);
}
inline Error ProtocolError(const std::string& msg) {
  return Error(ErrorKind::kProtocol, msg);
}
inline Error IoError(const std::string& msg) {
  return Error(ErrorKind::kIo, msg);
}

}  // namespace edacsc

#endif  // EDACSC_ERROR_H_
