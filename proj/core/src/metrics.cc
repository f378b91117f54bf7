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

#include "drs/metrics.h"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "drs/parallel.h"

namespace drs {
namespace {

struct Counts {
  long matched = 0;
  long size_sys = 0;
  long size_gold = 0;

  void Add(const MatchResult &r) {
    matched += r.matched;
    size_sys += r.size_sys;
    size_gold += r.size_gold;
  }
};

SweepRow MakeRow(int restarts, std::span<const SweepPair> pairs,
                 const std::vector<MatchResult> &results, double seconds) {
  SweepRow row;
  row.restarts = restarts;
  row.seconds = seconds;
  Counts total;
  std::map<int, Counts> groups;
  for (size_t i = 0; i < results.size(); ++i) {
    total.Add(results[i]);
    if (pairs[i].length) groups[*pairs[i].length].Add(results[i]);
  }
  row.matched = total.matched;
  row.size_sys = total.size_sys;
  row.size_gold = total.size_gold;
  row.score = ComputePrf(total.matched, total.size_sys, total.size_gold);
  for (const auto &[length, c] : groups) {
    row.by_length[length] = ComputePrf(c.matched, c.size_sys, c.size_gold);
  }
  return row;
}

}  // namespace

CorpusScore Aggregate(std::vector<DocumentResult> results) {
  CorpusScore score;
  Counts total;
  for (const auto &doc : results) {
    total.Add(doc.result);
    score.macro.precision += doc.result.precision;
    score.macro.recall += doc.result.recall;
    score.macro.f1 += doc.result.f1;
  }
  score.matched = total.matched;
  score.size_sys = total.size_sys;
  score.size_gold = total.size_gold;
  score.micro = ComputePrf(total.matched, total.size_sys, total.size_gold);
  if (!results.empty()) {
    const double n = static_cast<double>(results.size());
    score.macro.precision /= n;
    score.macro.recall /= n;
    score.macro.f1 /= n;
  }
  score.per_doc = std::move(results);
  return score;
}

const char *ClauseCategoryName(ClauseCategory category) {
  static constexpr const char *kNames[kNumClauseCategories] = {
      "REF", "NOT", "POS", "NEC", "IMP", "DIS",
      "PRP", "REL", "DRS", "Compare", "Concept", "Role"};
  return kNames[static_cast<size_t>(category)];
}

ClauseCategory CategoryOf(const Clause &clause) {
  const ClauseTag &tag = clause.tag();
  switch (tag.tag_class) {
    case TagClass::kConcept: return ClauseCategory::kConcept;
    case TagClass::kRole: return ClauseCategory::kRole;
    case TagClass::kRelation: return ClauseCategory::kREL;
    case TagClass::kOperator: break;
  }
  switch (tag.op) {
    case Operator::kREF: return ClauseCategory::kREF;
    case Operator::kNOT: return ClauseCategory::kNOT;
    case Operator::kPOS: return ClauseCategory::kPOS;
    case Operator::kNEC: return ClauseCategory::kNEC;
    case Operator::kIMP: return ClauseCategory::kIMP;
    case Operator::kDIS: return ClauseCategory::kDIS;
    case Operator::kPRP: return ClauseCategory::kPRP;
    case Operator::kDRS: return ClauseCategory::kDRS;
    default: return ClauseCategory::kCompare;
  }
}

long ClauseTypeStats::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0L);
}

ClauseTypeStats CountClauseTypes(std::span<const ClausalForm> corpus) {
  ClauseTypeStats stats;
  for (const auto &form : corpus) {
    for (const auto &clause : form.clauses()) {
      ++stats.counts[static_cast<size_t>(CategoryOf(clause))];
    }
  }
  return stats;
}

SweepReport RunSweep(std::span<const SweepPair> pairs,
                     std::span<const int> restart_list,
                     const MatchConfig &config, const SweepOptions &options) {
  for (size_t i = 0; i < restart_list.size(); ++i) {
    if (restart_list[i] < 1 || (i > 0 && restart_list[i] < restart_list[i - 1])) {
      throw std::invalid_argument("restart list must be ascending and positive");
    }
  }
  using Clock = std::chrono::steady_clock;
  SweepReport report;
  std::vector<MatchResult> results(pairs.size());
  for (int restarts : restart_list) {
    MatchConfig row_config = config;
    row_config.restarts = restarts;
    const auto start = Clock::now();
    ParallelFor(pairs.size(), options.parallel, [&](size_t i) {
      results[i] = MatchForms(pairs[i].sys, pairs[i].gold, row_config);
    });
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    report.rows.push_back(MakeRow(restarts, pairs, results, elapsed.count()));
  }
  if (options.include_optimal) {
    const auto start = Clock::now();
    ParallelFor(pairs.size(), options.parallel, [&](size_t i) {
      results[i] = OptimalMatch(pairs[i].sys, pairs[i].gold, options.limits,
                                config.keep_refs);
    });
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    report.optimal = MakeRow(0, pairs, results, elapsed.count());
  }
  return report;
}

}  // namespace drs
