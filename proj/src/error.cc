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

#include "error.h"

namespace fedbandit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kTooFewAgents: return "TooFewAgents";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kInvalidScale: return "InvalidScale";
    case ErrorCode::kEmptyHistory: return "EmptyHistory";
    case ErrorCode::kRewardOutOfRange: return "RewardOutOfRange";
    case ErrorCode::kMonitorViolation: return "MonitorViolation";
    case ErrorCode::kGapTooSmall: return "GapTooSmall";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kEmptyArm: return "EmptyArm";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fedbandit
