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

#ifndef DRS_ORACLE_H_
#define DRS_ORACLE_H_

#include <cstdint>

#include "drs/clause.h"
#include "drs/error.h"
#include "drs/match.h"

namespace drs {

struct OracleLimits {
  int64_t max_nodes = 20'000'000;
  int max_vars_per_side = 40;
};

// Raised when the node budget runs out. Carries the best mapping found so
// far; it is a lower bound, not a certified optimum.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string &message, MatchResult partial)
      : Error(ErrorCode::kBudgetExceeded, message),
        partial_(std::move(partial)) {}

  const MatchResult &partial() const { return partial_; }

 private:
  MatchResult partial_;
};

// Maximum matched-clause count over all partial injective kind-respecting
// mappings, by depth-first branch and bound. Sources are decided in
// descending clause-degree order; each is mapped to a free compatible
// target or left unmapped. A branch is cut when the matched count so far
// plus the number of undecided clauses that can still match is no better
// than the incumbent.
// Throws kTooLarge when either side exceeds max_vars_per_side and
// BudgetExceededError when max_nodes is hit.
MatchResult OptimalMatch(const ClausalForm &sys, const ClausalForm &gold,
                         const OracleLimits &limits = {},
                         bool keep_refs = false);

struct ExactOutcome {
  int matched = 0;
  bool complete = true;  // false when the node budget ran out
  Assignment best;
};

// Same search on a prepared problem. Ignores max_vars_per_side.
ExactOutcome SolveExactly(const MatchProblem &problem,
                          const OracleLimits &limits);

}  // namespace drs

#endif  // DRS_ORACLE_H_
