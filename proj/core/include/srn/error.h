// Copyright 2026 The SRN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRN_ERROR_H_
#define SRN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace srn {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kNonFinite,
  kOutOfRange,
  kInvalidState,
  kUndecodable,
  kIo,
  kBadMagic,
  kTruncated,
  kCountMismatch,
  kEmptyResult,
  kCorruptHeader,
  kVersionMismatch,
  kSizeMismatch,
  kConfigParse,
  kUnknownKey,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported as srn::Error; callers
// that need to distinguish failure modes switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, ErrorCode code, const char* message) {
  if (!condition) Fail(code, message);
}

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kNonFinite: return "non-finite value";
    case ErrorCode::kOutOfRange: return "out of range";
    case ErrorCode::kInvalidState: return "invalid state";
    case ErrorCode::kUndecodable: return "undecodable";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kBadMagic: return "bad magic";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kCountMismatch: return "count mismatch";
    case ErrorCode::kEmptyResult: return "empty result";
    case ErrorCode::kCorruptHeader: return "corrupt header";
    case ErrorCode::kVersionMismatch: return "version mismatch";
    case ErrorCode::kSizeMismatch: return "size mismatch";
    case ErrorCode::kConfigParse: return "config parse error";
    case ErrorCode::kUnknownKey: return "unknown key";
  }
  return "unknown";
}

}  // namespace srn

#endif  // SRN_ERROR_H_
