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

#include "drs/oracle.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace drs {
namespace {

constexpr int kUndecided = -2;

class BranchAndBound {
 public:
  BranchAndBound(const MatchProblem &problem, const OracleLimits &limits)
      : problem_(problem),
        limits_(limits),
        assignment_(problem.num_sources(), kUndecided),
        taken_(problem.num_targets(), false),
        undecided_vars_(problem.num_clauses(), 0),
        best_(problem.num_sources(), kUnmapped) {
    order_.resize(problem.num_sources());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return problem.clauses_of(x).size() > problem.clauses_of(y).size();
    });
    for (int c = 0; c < problem.num_clauses(); ++c) {
      undecided_vars_[c] =
          static_cast<int>(problem.clause(c).variables.size());
    }
  }

  // Returns false when the node budget ran out.
  bool Run() {
    Search(0, 0);
    return !exhausted_;
  }

  int best_score() const { return best_score_; }
  const Assignment &best() const { return best_; }

 private:
  // Whether clause c can still match given the decisions so far.
  bool StillPossible(int c) const {
    const auto &pattern = problem_.clause(c);
    for (const auto &candidate : pattern.candidates) {
      bool ok = true;
      for (size_t i = 0; ok && i < candidate.size(); ++i) {
        const int a = assignment_[pattern.slots[i]];
        if (a == kUndecided) {
          ok = !taken_[candidate[i]];
        } else {
          ok = a == candidate[i];
        }
      }
      if (ok) return true;
    }
    return false;
  }

  int Bound(int matched) const {
    int bound = matched;
    for (int c = 0; c < problem_.num_clauses(); ++c) {
      if (undecided_vars_[c] > 0 && StillPossible(c)) ++bound;
    }
    return bound;
  }

  // Decides source order_[depth]; matched counts fully decided clauses.
  void Search(int depth, int matched) {
    if (exhausted_) return;
    if (++nodes_ > limits_.max_nodes) {
      exhausted_ = true;
      return;
    }
    if (depth == static_cast<int>(order_.size())) {
      if (matched > best_score_) {
        best_score_ = matched;
        for (int s = 0; s < problem_.num_sources(); ++s) {
          best_[s] = assignment_[s] == kUndecided ? kUnmapped : assignment_[s];
        }
      }
      return;
    }
    if (Bound(matched) <= best_score_) return;

    const int s = order_[depth];
    for (int t = 0; t < problem_.num_targets(); ++t) {
      if (taken_[t] || !problem_.Compatible(s, t)) continue;
      taken_[t] = true;
      Try(depth, matched, s, t);
      taken_[t] = false;
      if (exhausted_) return;
    }
    Try(depth, matched, s, kUnmapped);
  }

  void Try(int depth, int matched, int s, int t) {
    assignment_[s] = t;
    int gained = 0;
    for (int c : problem_.clauses_of(s)) {
      if (--undecided_vars_[c] == 0 && t != kUnmapped &&
          problem_.ClauseMatches(c, assignment_)) {
        ++gained;
      }
    }
    Search(depth + 1, matched + gained);
    for (int c : problem_.clauses_of(s)) ++undecided_vars_[c];
    assignment_[s] = kUndecided;
  }

  const MatchProblem &problem_;
  const OracleLimits &limits_;
  std::vector<int> order_;
  Assignment assignment_;
  std::vector<bool> taken_;
  std::vector<int> undecided_vars_;
  Assignment best_;
  int best_score_ = -1;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ExactOutcome SolveExactly(const MatchProblem &problem,
                          const OracleLimits &limits) {
  BranchAndBound search(problem, limits);
  ExactOutcome outcome;
  outcome.complete = search.Run();
  outcome.matched = std::max(search.best_score(), 0);
  outcome.best = search.best();
  return outcome;
}

MatchResult OptimalMatch(const ClausalForm &sys, const ClausalForm &gold,
                         const OracleLimits &limits, bool keep_refs) {
  const PreparedPair pair = PreparePair(sys, gold, keep_refs);
  const MatchProblem problem(pair.sys, pair.gold);
  if (problem.num_sources() > limits.max_vars_per_side ||
      problem.num_targets() > limits.max_vars_per_side) {
    throw Error(ErrorCode::kTooLarge,
                "exact matching limited to " +
                    std::to_string(limits.max_vars_per_side) +
                    " variables per side (got " +
                    std::to_string(problem.num_sources()) + " and " +
                    std::to_string(problem.num_targets()) + ")");
  }
  const ExactOutcome outcome = SolveExactly(problem, limits);

  MatchResult result;
  result.best_mapping = ReportedMapping(problem, outcome.best, pair);
  result.SetCounts(outcome.matched, static_cast<int>(pair.sys.size()),
                   static_cast<int>(pair.gold.size()));
  result.optimal = outcome.complete;
  if (!outcome.complete) {
    throw BudgetExceededError(
        "exact search stopped after " + std::to_string(limits.max_nodes) +
            " nodes; best found " + std::to_string(outcome.matched),
        std::move(result));
  }
  return result;
}

}  // namespace drs
