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

#ifndef DRS_MATCH_PROBLEM_H_
#define DRS_MATCH_PROBLEM_H_

#include <span>
#include <string>
#include <vector>

#include "drs/clause.h"
#include "drs/mapping.h"

namespace drs {

inline constexpr int kUnmapped = -1;

// Source variable index -> target variable index, or kUnmapped.
using Assignment = std::vector<int>;

// Indexed view of a (source, target) pair of forms shared by the hill
// climber and the exact search. Variables are numbered in name order on
// each side. For every source clause the problem stores the target clauses
// it could become under some assignment: same tag, same constants in the
// same places, kind-compatible variables and the same pattern of repeated
// variables.
class MatchProblem {
 public:
  struct ClausePattern {
    TagClass tag_class = TagClass::kOperator;
    std::string tag_key;                       // tag name plus sense
    std::vector<int> slots;                    // source variable per slot
    std::vector<int> variables;                // distinct sources in slots
    std::vector<std::vector<int>> candidates;  // target variable per slot
  };

  MatchProblem(const ClausalForm &source, const ClausalForm &target);

  int num_sources() const { return static_cast<int>(source_names_.size()); }
  int num_targets() const { return static_cast<int>(target_names_.size()); }
  const std::string &source_name(int s) const { return source_names_[s]; }
  const std::string &target_name(int t) const { return target_names_[t]; }
  VariableKind source_kind(int s) const { return source_kinds_[s]; }
  VariableKind target_kind(int t) const { return target_kinds_[t]; }
  bool Compatible(int s, int t) const {
    return source_kinds_[s] == target_kinds_[t];
  }

  // Index of a variable by name, or -1.
  int SourceIndex(const std::string &name) const;
  int TargetIndex(const std::string &name) const;

  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  int num_target_clauses() const { return num_target_clauses_; }
  const ClausePattern &clause(int c) const { return clauses_[c]; }

  // Target clauses in document order; `candidates` is left empty.
  const ClausePattern &target_clause(int c) const {
    return target_clauses_[c];
  }

  // Source clauses mentioning source variable s.
  std::span<const int> clauses_of(int s) const { return clauses_of_[s]; }

  bool ClauseMatches(int c, const Assignment &assignment) const;
  int CountMatched(const Assignment &assignment) const;

  // Throws kInvalidMapping for unknown names, non-injective or
  // kind-violating pairs.
  Assignment ToAssignment(const VariableMapping &mapping) const;
  VariableMapping ToMapping(const Assignment &assignment) const;

  // True when the assignment is injective and kind-respecting.
  bool IsValid(const Assignment &assignment) const;

 private:
  std::vector<std::string> source_names_;
  std::vector<std::string> target_names_;
  std::vector<VariableKind> source_kinds_;
  std::vector<VariableKind> target_kinds_;
  std::vector<ClausePattern> clauses_;
  std::vector<ClausePattern> target_clauses_;
  std::vector<std::vector<int>> clauses_of_;
  int num_target_clauses_ = 0;
};

}  // namespace drs

#endif  // DRS_MATCH_PROBLEM_H_
