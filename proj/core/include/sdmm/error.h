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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdmm {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kDivisionByZero,
  kFieldMismatch,
  kDimensionMismatch,
  kSingularSystem,
  kInvalidChainLength,
  kInvalidFraction,
  kPartitionError,
  kPointSelectionFailed,
  kAuditTooLarge,
  kSearchTooLarge,
  kEmptySet,
  kParseError,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// lets callers (and the CLI exit-code mapping) dispatch without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the code-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void Throw(ErrorCode code, const std::string& message);

#define SDMM_ENFORCE(cond, code, msg)                   \
  do {                                                  \
    if (!(cond)) ::sdmm::Throw((code), (msg));          \
  } while (0)

}  // namespace sdmm
