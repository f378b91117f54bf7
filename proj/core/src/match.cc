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

#include "drs/match.h"

#include <cassert>
#include <stdexcept>

#include "drs/normalize.h"
#include "drs/score.h"

namespace drs {
namespace {

// A single change to the current assignment: first_source takes
// first_target, and for swaps second_source takes second_target.
struct Move {
  int first_source = -1;
  int first_target = kUnmapped;
  int second_source = -1;
  int second_target = kUnmapped;
};

// Keeps per-clause match flags so a move is scored by re-checking only the
// clauses that mention the sources it touches.
class Climber {
 public:
  Climber(const MatchProblem &problem, Assignment &assignment)
      : problem_(problem),
        assignment_(assignment),
        owner_(problem.num_targets(), kUnmapped),
        matched_(problem.num_clauses(), 0),
        stamp_(problem.num_clauses(), 0) {
    for (int s = 0; s < problem.num_sources(); ++s) {
      if (assignment_[s] != kUnmapped) owner_[assignment_[s]] = s;
    }
    for (int c = 0; c < problem.num_clauses(); ++c) {
      matched_[c] = problem.ClauseMatches(c, assignment_) ? 1 : 0;
      total_ += matched_[c];
    }
  }

  int total() const { return total_; }

  int Gain(const Move &move) {
    Set(move);
    int gain = 0;
    ForAffected(move, [&](int c) {
      gain += (problem_.ClauseMatches(c, assignment_) ? 1 : 0) - matched_[c];
    });
    Restore();
    return gain;
  }

  void Apply(const Move &move) {
    Set(move);
    saved_.clear();
    for (int s : {move.first_source, move.second_source}) {
      if (s < 0) continue;
      for (int t = 0; t < problem_.num_targets(); ++t) {
        if (owner_[t] == s) owner_[t] = kUnmapped;
      }
    }
    for (int s : {move.first_source, move.second_source}) {
      if (s >= 0 && assignment_[s] != kUnmapped) owner_[assignment_[s]] = s;
    }
    ForAffected(move, [&](int c) {
      const int now = problem_.ClauseMatches(c, assignment_) ? 1 : 0;
      total_ += now - matched_[c];
      matched_[c] = static_cast<char>(now);
    });
  }

  int Owner(int t) const { return owner_[t]; }

 private:
  void Set(const Move &move) {
    saved_.clear();
    saved_.emplace_back(move.first_source, assignment_[move.first_source]);
    if (move.second_source >= 0) {
      saved_.emplace_back(move.second_source,
                          assignment_[move.second_source]);
    }
    assignment_[move.first_source] = move.first_target;
    if (move.second_source >= 0) {
      assignment_[move.second_source] = move.second_target;
    }
  }

  void Restore() {
    for (const auto &[s, t] : saved_) assignment_[s] = t;
    saved_.clear();
  }

  template <typename Fn>
  void ForAffected(const Move &move, Fn &&fn) {
    ++epoch_;
    for (int s : {move.first_source, move.second_source}) {
      if (s < 0) continue;
      for (int c : problem_.clauses_of(s)) {
        if (stamp_[c] == epoch_) continue;
        stamp_[c] = epoch_;
        fn(c);
      }
    }
  }

  const MatchProblem &problem_;
  Assignment &assignment_;
  std::vector<int> owner_;
  std::vector<char> matched_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
  int total_ = 0;
  std::vector<std::pair<int, int>> saved_;
};

void SeedFromClauses(TagClass tag_class, const MatchProblem &problem,
                     Assignment &assignment) {
  std::vector<bool> taken(problem.num_targets(), false);
  for (int c = 0; c < problem.num_clauses(); ++c) {
    const auto &source = problem.clause(c);
    if (source.tag_class != tag_class) continue;
    for (int d = 0; d < problem.num_target_clauses(); ++d) {
      const auto &target = problem.target_clause(d);
      if (target.tag_class != tag_class || target.tag_key != source.tag_key ||
          target.slots.size() != source.slots.size()) {
        continue;
      }
      for (size_t i = 0; i < source.slots.size(); ++i) {
        const int s = source.slots[i];
        const int t = target.slots[i];
        if (assignment[s] == kUnmapped && !taken[t] &&
            problem.Compatible(s, t)) {
          assignment[s] = t;
          taken[t] = true;
        }
      }
    }
  }
}

void Shuffle(std::vector<int> &items, Rng &rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformIndex(rng, i)]);
  }
}

}  // namespace

const char *SeedKindName(SeedKind kind) {
  switch (kind) {
    case SeedKind::kConcept: return "concept";
    case SeedKind::kRole: return "role";
    case SeedKind::kRandom: return "random";
  }
  return "?";
}

SeedKind MatchConfig::SeedFor(int restart) const {
  if (restart >= 0 && static_cast<size_t>(restart) < seed_schedule.size()) {
    return seed_schedule[restart];
  }
  return SeedKind::kRandom;
}

void MatchResult::SetCounts(int matched_clauses, int sys, int gold) {
  matched = matched_clauses;
  size_sys = sys;
  size_gold = gold;
  const PrfScore score = ComputePrf(matched, sys, gold);
  precision = score.precision;
  recall = score.recall;
  f1 = score.f1;
}

int ScoreMapping(const VariableMapping &mapping, const ClausalForm &a,
                 const ClausalForm &b) {
  MatchProblem problem(a, b);
  return problem.CountMatched(problem.ToAssignment(mapping));
}

Assignment GenerateSeed(SeedKind kind, const MatchProblem &problem, Rng &rng) {
  Assignment assignment(problem.num_sources(), kUnmapped);
  switch (kind) {
    case SeedKind::kConcept:
      SeedFromClauses(TagClass::kConcept, problem, assignment);
      break;
    case SeedKind::kRole:
      SeedFromClauses(TagClass::kRole, problem, assignment);
      break;
    case SeedKind::kRandom:
      for (VariableKind kind :
           {VariableKind::kBox, VariableKind::kReferent, VariableKind::kDual}) {
        std::vector<int> sources, targets;
        for (int s = 0; s < problem.num_sources(); ++s) {
          if (problem.source_kind(s) == kind) sources.push_back(s);
        }
        for (int t = 0; t < problem.num_targets(); ++t) {
          if (problem.target_kind(t) == kind) targets.push_back(t);
        }
        Shuffle(sources, rng);
        Shuffle(targets, rng);
        for (size_t i = 0; i < std::min(sources.size(), targets.size()); ++i) {
          assignment[sources[i]] = targets[i];
        }
      }
      break;
  }
  return assignment;
}

VariableMapping GenerateSeed(SeedKind kind, const ClausalForm &a,
                             const ClausalForm &b, Rng &rng) {
  MatchProblem problem(a, b);
  return problem.ToMapping(GenerateSeed(kind, problem, rng));
}

int HillClimb(const MatchProblem &problem, Assignment &assignment,
              bool verify_gains) {
  if (!problem.IsValid(assignment)) {
    throw std::invalid_argument("hill climbing from an invalid assignment");
  }
  Climber climber(problem, assignment);
  while (true) {
    int best_gain = 0;
    Move best;
    auto consider = [&](const Move &move) {
      const int gain = climber.Gain(move);
      if (gain > best_gain) {
        best_gain = gain;
        best = move;
      }
    };
    for (int s = 0; s < problem.num_sources(); ++s) {
      const int current = assignment[s];
      for (int t = 0; t < problem.num_targets(); ++t) {
        if (t == current || !problem.Compatible(s, t)) continue;
        const int owner = climber.Owner(t);
        if (owner == kUnmapped) {
          consider({s, t});  // map or move to a free target
        } else if (current != kUnmapped && owner > s &&
                   problem.Compatible(owner, current)) {
          consider({s, t, owner, current});  // swap
        }
      }
      if (current != kUnmapped) consider({s, kUnmapped});
    }
    if (best_gain <= 0) break;
    climber.Apply(best);
    assert(problem.IsValid(assignment));
    if (verify_gains && problem.CountMatched(assignment) != climber.total()) {
      throw std::logic_error("incremental gain diverged from full recount");
    }
  }
  return climber.total();
}

std::pair<VariableMapping, int> HillClimb(const ClausalForm &a,
                                          const ClausalForm &b,
                                          const VariableMapping &initial) {
  MatchProblem problem(a, b);
  Assignment assignment = problem.ToAssignment(initial);
  const int matched = HillClimb(problem, assignment);
  return {problem.ToMapping(assignment), matched};
}

PreparedPair PreparePair(const ClausalForm &sys, const ClausalForm &gold,
                         bool keep_refs) {
  auto [sys_form, sys_table] = StandardizeVariables(
      keep_refs ? sys : RemoveRedundantRefs(sys), "a");
  auto [gold_form, gold_table] = StandardizeVariables(
      keep_refs ? gold : RemoveRedundantRefs(gold), "b");
  return {std::move(sys_form), std::move(gold_form), sys_table.Inverse(),
          gold_table.Inverse()};
}

VariableMapping ReportedMapping(const MatchProblem &problem,
                                const Assignment &assignment,
                                const PreparedPair &pair) {
  VariableMapping mapping;
  for (int c = 0; c < problem.num_clauses(); ++c) {
    if (!problem.ClauseMatches(c, assignment)) continue;
    for (int s : problem.clause(c).variables) {
      mapping.Add(pair.sys_names.at(problem.source_name(s)),
                  pair.gold_names.at(problem.target_name(assignment[s])));
    }
  }
  return mapping;
}

MatchResult MatchForms(const ClausalForm &sys, const ClausalForm &gold,
                       const MatchConfig &config) {
  if (config.restarts < 1) {
    throw std::invalid_argument("restarts must be at least 1");
  }
  const PreparedPair pair = PreparePair(sys, gold, config.keep_refs);
  const MatchProblem problem(pair.sys, pair.gold);

  MatchResult result;
  result.per_restart.reserve(config.restarts);
  Assignment best_assignment(problem.num_sources(), kUnmapped);
  int best = -1;
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng = RestartRng(config.rng_seed, static_cast<uint64_t>(r));
    const SeedKind seed = config.SeedFor(r);
    Assignment assignment = GenerateSeed(seed, problem, rng);
    const int matched = HillClimb(problem, assignment, config.verify_gains);
    result.per_restart.push_back({seed, matched});
    if (matched > best) {
      best = matched;
      best_assignment = std::move(assignment);
    }
  }
  result.best_mapping = ReportedMapping(problem, best_assignment, pair);
  result.SetCounts(best, static_cast<int>(pair.sys.size()),
                   static_cast<int>(pair.gold.size()));
  return result;
}

}  // namespace drs
