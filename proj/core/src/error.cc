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

#include "drs/error.h"

namespace drs {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongArity: return "WrongArity";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kConstantInBoxPosition: return "ConstantInBoxPosition";
    case ErrorCode::kConstantInReferentPosition:
      return "ConstantInReferentPosition";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateDocId: return "DuplicateDocId";
    case ErrorCode::kInvalidMapping: return "InvalidMapping";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnmappedRelation: return "UnmappedRelation";
    case ErrorCode::kCorpusTooSmall: return "CorpusTooSmall";
    case ErrorCode::kUnpairedDocument: return "UnpairedDocument";
  }
  return "Unknown";
}

}  // namespace drs
