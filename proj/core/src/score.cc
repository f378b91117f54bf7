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

#include "drs/score.h"

#include <string>

#include "drs/error.h"

namespace drs {

PrfScore ComputePrf(long matched, long size_sys, long size_gold) {
  if (matched < 0 || size_sys < 0 || size_gold < 0 || matched > size_sys ||
      matched > size_gold) {
    throw Error(ErrorCode::kInvalidCounts,
                "invalid counts: matched=" + std::to_string(matched) +
                    " sys=" + std::to_string(size_sys) +
                    " gold=" + std::to_string(size_gold));
  }
  PrfScore score;
  if (size_sys > 0) score.precision = double(matched) / double(size_sys);
  if (size_gold > 0) score.recall = double(matched) / double(size_gold);
  if (size_sys + size_gold > 0) {
    score.f1 = 2.0 * double(matched) / double(size_sys + size_gold);
  }
  return score;
}

}  // namespace drs
