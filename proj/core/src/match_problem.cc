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

#include "drs/match_problem.h"

#include <algorithm>
#include <unordered_map>

#include "drs/error.h"

namespace drs {
namespace {

// Variable slots of a clause: the box label followed by variable arguments.
std::vector<std::string> VariableSlots(const Clause &clause) {
  std::vector<std::string> slots = {clause.box()};
  for (const auto &arg : clause.args()) {
    if (!arg.constant) slots.push_back(arg.text);
  }
  return slots;
}

std::string TagKey(const Clause &clause) {
  const ClauseTag &tag = clause.tag();
  return tag.sense.empty() ? tag.name : tag.name + "." + tag.sense;
}

// Everything about a clause except its variable names.
std::string Signature(const Clause &clause) {
  std::string key = clause.tag().name;
  key += '\x1f';
  key += clause.tag().sense;
  key += '\x1f';
  key += std::to_string(static_cast<int>(clause.tag().tag_class));
  for (const auto &arg : clause.args()) {
    key += '\x1f';
    key += arg.constant ? "c:" + arg.text : "v";
  }
  return key;
}

int IndexOf(const std::vector<std::string> &names, const std::string &name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

}  // namespace

MatchProblem::MatchProblem(const ClausalForm &source,
                           const ClausalForm &target)
    : num_target_clauses_(static_cast<int>(target.size())) {
  for (const auto &[name, kind] : source.variables()) {
    source_names_.push_back(name);
    source_kinds_.push_back(kind);
  }
  for (const auto &[name, kind] : target.variables()) {
    target_names_.push_back(name);
    target_kinds_.push_back(kind);
  }

  std::unordered_map<std::string, std::vector<std::vector<int>>> by_signature;
  for (const auto &clause : target.clauses()) {
    ClausePattern pattern;
    pattern.tag_class = clause.tag().tag_class;
    pattern.tag_key = TagKey(clause);
    for (const auto &name : VariableSlots(clause)) {
      pattern.slots.push_back(IndexOf(target_names_, name));
    }
    by_signature[Signature(clause)].push_back(pattern.slots);
    target_clauses_.push_back(std::move(pattern));
  }

  clauses_of_.resize(source_names_.size());
  clauses_.reserve(source.size());
  for (const auto &clause : source.clauses()) {
    ClausePattern pattern;
    pattern.tag_class = clause.tag().tag_class;
    pattern.tag_key = TagKey(clause);
    for (const auto &name : VariableSlots(clause)) {
      pattern.slots.push_back(IndexOf(source_names_, name));
    }
    pattern.variables = pattern.slots;
    std::sort(pattern.variables.begin(), pattern.variables.end());
    pattern.variables.erase(
        std::unique(pattern.variables.begin(), pattern.variables.end()),
        pattern.variables.end());

    auto it = by_signature.find(Signature(clause));
    if (it != by_signature.end()) {
      for (const auto &candidate : it->second) {
        bool ok = true;
        const size_t n = pattern.slots.size();
        for (size_t i = 0; ok && i < n; ++i) {
          ok = Compatible(pattern.slots[i], candidate[i]);
          for (size_t j = i + 1; ok && j < n; ++j) {
            ok = (pattern.slots[i] == pattern.slots[j]) ==
                 (candidate[i] == candidate[j]);
          }
        }
        if (ok) pattern.candidates.push_back(candidate);
      }
    }
    const int index = static_cast<int>(clauses_.size());
    for (int s : pattern.variables) clauses_of_[s].push_back(index);
    clauses_.push_back(std::move(pattern));
  }
}

int MatchProblem::SourceIndex(const std::string &name) const {
  return IndexOf(source_names_, name);
}

int MatchProblem::TargetIndex(const std::string &name) const {
  return IndexOf(target_names_, name);
}

bool MatchProblem::ClauseMatches(int c, const Assignment &assignment) const {
  const ClausePattern &pattern = clauses_[c];
  for (int s : pattern.variables) {
    if (assignment[s] == kUnmapped) return false;
  }
  for (const auto &candidate : pattern.candidates) {
    bool all = true;
    for (size_t i = 0; all && i < candidate.size(); ++i) {
      all = assignment[pattern.slots[i]] == candidate[i];
    }
    if (all) return true;
  }
  return false;
}

int MatchProblem::CountMatched(const Assignment &assignment) const {
  int matched = 0;
  for (int c = 0; c < num_clauses(); ++c) {
    if (ClauseMatches(c, assignment)) ++matched;
  }
  return matched;
}

Assignment MatchProblem::ToAssignment(const VariableMapping &mapping) const {
  Assignment assignment(source_names_.size(), kUnmapped);
  std::vector<bool> taken(target_names_.size(), false);
  for (const auto &[from, to] : mapping.pairs()) {
    const int s = SourceIndex(from);
    const int t = TargetIndex(to);
    if (s < 0 || t < 0) {
      throw Error(ErrorCode::kInvalidMapping,
                  "mapping " + from + "->" + to + " names an unknown variable");
    }
    if (!Compatible(s, t)) {
      throw Error(ErrorCode::kInvalidMapping,
                  "mapping " + from + "->" + to + " joins a " +
                      VariableKindName(source_kinds_[s]) + " and a " +
                      VariableKindName(target_kinds_[t]));
    }
    if (taken[t]) {
      throw Error(ErrorCode::kInvalidMapping,
                  "target " + to + " is mapped twice");
    }
    taken[t] = true;
    assignment[s] = t;
  }
  return assignment;
}

VariableMapping MatchProblem::ToMapping(const Assignment &assignment) const {
  VariableMapping mapping;
  for (int s = 0; s < num_sources(); ++s) {
    if (assignment[s] != kUnmapped) {
      mapping.Add(source_names_[s], target_names_[assignment[s]]);
    }
  }
  return mapping;
}

bool MatchProblem::IsValid(const Assignment &assignment) const {
  if (assignment.size() != source_names_.size()) return false;
  std::vector<bool> taken(target_names_.size(), false);
  for (int s = 0; s < num_sources(); ++s) {
    const int t = assignment[s];
    if (t == kUnmapped) continue;
    if (t < 0 || t >= num_targets() || taken[t] || !Compatible(s, t)) {
      return false;
    }
    taken[t] = true;
  }
  return true;
}

}  // namespace drs
