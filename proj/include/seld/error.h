// Copyright 2026 The seldkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELD_ERROR_H_
#define SELD_ERROR_H_

#include <stdexcept>
#include <string>

namespace seld {

// Broad failure classes. The CLI maps kInvalidArgument to exit code 1 and
// everything else to exit code 2.
enum class ErrorKind {
  kInvalidArgument,
  kDataError,
  kIoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalidArgument(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}

[[noreturn]] inline void ThrowDataError(const std::string& message) {
  throw Error(ErrorKind::kDataError, message);
}

[[noreturn]] inline void ThrowIoError(const std::string& message) {
  throw Error(ErrorKind::kIoError, message);
}

}  // namespace seld

#endif  // SELD_ERROR_H_
