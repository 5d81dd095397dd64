// Copyright 2026 The fedbandit Authors
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

#ifndef FEDBANDIT_SRC_ERROR_H_
#define FEDBANDIT_SRC_ERROR_H_

#include <stdexcept>
#include <string>

namespace fedbandit {

// Numeric values are part of the C ABI (see fedbandit.h); append only.
enum class ErrorCode : int {
  kOk = 0,
  kParseError = 1,
  kValidationError = 2,
  kDisconnectedGraph = 3,
  kSelfLoop = 4,
  kDuplicateEdge = 5,
  kTooFewAgents = 6,
  kNumericalFailure = 7,
  kInvalidEpsilon = 8,
  kInvalidScale = 9,
  kEmptyHistory = 10,
  kRewardOutOfRange = 11,
  kMonitorViolation = 12,
  kGapTooSmall = 13,
  kOverflow = 14,
  kSchemaError = 15,
  kEmptyArm = 16,
  kIoError = 17,
  kInvalidArgument = 18,
  kInternal = 19,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_ERROR_H_
