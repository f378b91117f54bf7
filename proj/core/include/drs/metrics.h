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

#ifndef DRS_METRICS_H_
#define DRS_METRICS_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drs/clause.h"
#include "drs/match.h"
#include "drs/oracle.h"
#include "drs/score.h"

namespace drs {

struct DocumentResult {
  std::string doc_id;
  MatchResult result;
};

// Corpus-level scores. Micro scores come from summed counts; macro scores
// are unweighted means of the per-document scores.
struct CorpusScore {
  long matched = 0;
  long size_sys = 0;
  long size_gold = 0;
  PrfScore micro;
  PrfScore macro;
  std::vector<DocumentResult> per_doc;
};

CorpusScore Aggregate(std::vector<DocumentResult> results);

enum class ClauseCategory {
  kREF, kNOT, kPOS, kNEC, kIMP, kDIS, kPRP, kREL, kDRS, kCompare, kConcept,
  kRole,
};
inline constexpr size_t kNumClauseCategories = 12;

const char *ClauseCategoryName(ClauseCategory category);
ClauseCategory CategoryOf(const Clause &clause);

struct ClauseTypeStats {
  std::array<long, kNumClauseCategories> counts{};

  long operator[](ClauseCategory c) const {
    return counts[static_cast<size_t>(c)];
  }
  long total() const;
};

// Counts clause categories over whole forms; REF clauses are counted as
// they appear, before any redundancy removal.
ClauseTypeStats CountClauseTypes(std::span<const ClausalForm> corpus);

struct SweepPair {
  ClausalForm sys;
  ClausalForm gold;
  std::optional<int> length;  // grouping key for the per-length breakdown
};

struct SweepRow {
  int restarts = 0;  // 0 for the exact-search row
  long matched = 0;
  long size_sys = 0;
  long size_gold = 0;
  PrfScore score;
  double seconds = 0.0;
  std::map<int, PrfScore> by_length;
};

struct SweepOptions {
  bool include_optimal = false;
  OracleLimits limits;
  int parallel = 1;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::optional<SweepRow> optimal;
};

// Scores every pair once per restart count. Restart r always uses the same
// seed and rng stream, so the schedules of successive rows are nested and
// the micro F1 cannot decrease down the table. `restart_list` must be
// ascending and positive.
SweepReport RunSweep(std::span<const SweepPair> pairs,
                     std::span<const int> restart_list,
                     const MatchConfig &config,
                     const SweepOptions &options = {});

}  // namespace drs

#endif  // DRS_METRICS_H_
