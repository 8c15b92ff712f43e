// Copyright 2026 The selbn Authors
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

#ifndef SELBN_ERROR_HPP_
#define SELBN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace selbn {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kUnknownNode,
  kInvalidGraph,
  kNotChordal,
  kNoExtension,
  kGuardExceeded,
  kZeroConditioningEvent,
  kNotPositive,
  kNonConvergence,
  kPrecondition,
  kInternal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a code so the C layer can map
// it to a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Graph-file parse failure; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::kParse, line > 0 ? "line " + std::to_string(line) + ": " + message
                                          : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace selbn

#endif  // SELBN_ERROR_HPP_
