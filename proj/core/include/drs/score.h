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

#ifndef DRS_SCORE_H_
#define DRS_SCORE_H_

namespace drs {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// P = matched/size_sys, R = matched/size_gold, F1 = 2PR/(P+R), with every
// 0/0 taken as 0. Throws kInvalidCounts when matched exceeds either size or
// any count is negative.
PrfScore ComputePrf(long matched, long size_sys, long size_gold);

}  // namespace drs

#endif  // DRS_SCORE_H_
