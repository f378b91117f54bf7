// Copyright 2026 The drsmatch Authors.
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

#ifndef DRS_ERROR_H_
#define DRS_ERROR_H_

#include <stdexcept>
#include <string>

namespace drs {

// Failure categories raised by the toolkit. The CLI maps these onto exit
// codes, so keep the list stable.
enum class ErrorCode {
  kWrongArity,
  kUnknownTag,
  kConstantInBoxPosition,
  kConstantInReferentPosition,
  kParseError,
  kDuplicateDocId,
  kInvalidMapping,
  kInvalidCounts,
  kBudgetExceeded,
  kTooLarge,
  kUnmappedRelation,
  kCorpusTooSmall,
  kUnpairedDocument,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }

  // 1-based line number of the offending input, or 0 when not applicable.
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace drs

#endif  // DRS_ERROR_H_
