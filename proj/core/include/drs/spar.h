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

#ifndef DRS_SPAR_H_
#define DRS_SPAR_H_

#include <span>
#include <vector>

#include "drs/clause.h"
#include "drs/match.h"

namespace drs {

struct SparSelection {
  size_t index = 0;
  double mean_f1 = 0.0;
  std::vector<double> mean_f1_per_doc;
};

// Picks the document whose mean F1 against every other document is
// highest; ties go to the lowest index. Each unordered pair is matched in
// both directions and the better of the two F-scores is kept, so the score
// matrix is symmetric. Throws kCorpusTooSmall for fewer than two documents.
SparSelection SelectSpar(std::span<const ClausalForm> corpus,
                         const MatchConfig &config, int parallel = 1);

}  // namespace drs

#endif  // DRS_SPAR_H_
