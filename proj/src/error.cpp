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

#include "selbn/error.hpp"

namespace selbn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNotChordal: return "NotChordal";
    case ErrorCode::kNoExtension: return "NoExtension";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
    case ErrorCode::kZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace selbn
