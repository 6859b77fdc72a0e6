// Copyright 2026 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace submod {

// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  kIndexOutOfRange,
  kCapExceeded,
  kPrecondition,
  kPermutationInconsistent,
  kDescriptorMismatch,
  kParse,
  kValidation,
  kUsage,
  kMissingName,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kPrecondition: return "precondition_failed";
    case ErrorCode::kPermutationInconsistent: return "permutation_inconsistent";
    case ErrorCode::kDescriptorMismatch: return "descriptor_mismatch";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kValidation: return "validation_error";
    case ErrorCode::kUsage: return "usage_error";
    case ErrorCode::kMissingName: return "missing_name";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace submod
