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

#ifndef DRS_MATCH_H_
#define DRS_MATCH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drs/clause.h"
#include "drs/mapping.h"
#include "drs/match_problem.h"
#include "drs/rng.h"

namespace drs {

// How a restart builds its initial mapping.
enum class SeedKind { kConcept, kRole, kRandom };

const char *SeedKindName(SeedKind kind);

struct MatchConfig {
  int restarts = 20;
  uint64_t rng_seed = 42;
  // Seeds for the first restarts; later restarts are random.
  std::vector<SeedKind> seed_schedule = {SeedKind::kConcept, SeedKind::kRole};
  // Score REF clauses that a basic condition in the same box already makes
  // redundant.
  bool keep_refs = false;
  // Recount the full score after every accepted move and abort on a
  // mismatch with the incremental gain bookkeeping.
  bool verify_gains = false;

  SeedKind SeedFor(int restart) const;
};

struct RestartTrace {
  SeedKind seed = SeedKind::kRandom;
  int matched = 0;
};

// Scores are oriented: the first form is the system output (precision
// denominator), the second the gold standard (recall denominator).
struct MatchResult {
  // Restricted to variables that occur in matched clauses, in the original
  // variable names of the two inputs.
  VariableMapping best_mapping;
  int matched = 0;
  int size_sys = 0;
  int size_gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<RestartTrace> per_restart;
  bool optimal = false;  // set by the exact search only

  void SetCounts(int matched_clauses, int sys, int gold);
};

// Number of clauses of `a` that become clauses of `b` under `mapping`.
// Throws kInvalidMapping.
int ScoreMapping(const VariableMapping &mapping, const ClausalForm &a,
                 const ClausalForm &b);

// Initial mapping for one restart. Concept and role seeds walk the source's
// concept (role) clauses in document order and pair the variables of
// clauses with identical concepts (role names) while both sides are still
// free. Random seeds pair variables of each kind uniformly at random,
// mapping as many as the smaller side allows.
Assignment GenerateSeed(SeedKind kind, const MatchProblem &problem, Rng &rng);
VariableMapping GenerateSeed(SeedKind kind, const ClausalForm &a,
                             const ClausalForm &b, Rng &rng);

// Steepest-ascent hill climbing from `assignment`, which is updated in
// place. Moves are: map an unmapped source to a free target, move a mapped
// source to a free target, swap the targets of two mapped sources, and
// unmap a source. Only strictly improving moves are taken; ties go to the
// first move in (source, target) index order. Returns the matched count.
int HillClimb(const MatchProblem &problem, Assignment &assignment,
              bool verify_gains = false);
std::pair<VariableMapping, int> HillClimb(const ClausalForm &a,
                                          const ClausalForm &b,
                                          const VariableMapping &initial);

// Full matching procedure: optional redundant-REF removal, variable
// standardization, then `config.restarts` seeded hill climbs. The best
// restart wins, ties going to the earliest.
MatchResult MatchForms(const ClausalForm &sys, const ClausalForm &gold,
                       const MatchConfig &config = {});

// Shared by MatchForms and the exact search: drops redundant REFs unless
// `keep_refs`, then renames variables apart.
struct PreparedPair {
  ClausalForm sys;
  ClausalForm gold;
  std::map<std::string, std::string> sys_names;   // renamed -> original
  std::map<std::string, std::string> gold_names;  // renamed -> original
};
PreparedPair PreparePair(const ClausalForm &sys, const ClausalForm &gold,
                         bool keep_refs);

// Best mapping of a prepared pair restricted to matched clauses, in the
// original variable names.
VariableMapping ReportedMapping(const MatchProblem &problem,
                                const Assignment &assignment,
                                const PreparedPair &pair);

}  // namespace drs

#endif  // DRS_MATCH_H_
