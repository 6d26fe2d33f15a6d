// Copyright 2026 The sdmm-pre Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdmm/error.h"

namespace sdmm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kNotPrime:
      return "NotPrime";
    case ErrorCode::kDivisionByZero:
      return "DivisionByZero";
    case ErrorCode::kFieldMismatch:
      return "FieldMismatch";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kSingularSystem:
      return "SingularSystem";
    case ErrorCode::kInvalidChainLength:
      return "InvalidChainLength";
    case ErrorCode::kInvalidFraction:
      return "InvalidFraction";
    case ErrorCode::kPartitionError:
      return "PartitionError";
    case ErrorCode::kPointSelectionFailed:
      return "PointSelectionFailed";
    case ErrorCode::kAuditTooLarge:
      return "AuditTooLarge";
    case ErrorCode::kSearchTooLarge:
      return "SearchTooLarge";
    case ErrorCode::kEmptySet:
      return "EmptySet";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void Throw(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sdmm
