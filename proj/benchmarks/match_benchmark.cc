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

#include <benchmark/benchmark.h>

#include <vector>

#include "drs/match.h"
#include "drs/oracle.h"
#include "drs/rng.h"
#include "support/random_forms.h"

namespace drs {
namespace {

struct Pair {
  ClausalForm sys;
  ClausalForm gold;
};

std::vector<Pair> MakePairs(int n, int referents, int clauses) {
  Rng rng(1234);
  testing::FormShape shape;
  shape.max_boxes = 4;
  shape.max_referents = referents;
  shape.max_clauses = clauses;
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    ClausalForm a = testing::RandomForm(rng, shape);
    ClausalForm b = testing::Perturb(rng, a, shape);
    pairs.push_back({std::move(a), std::move(b)});
  }
  return pairs;
}

void BM_MatchForms(benchmark::State &state) {
  const auto pairs = MakePairs(64, 8, 40);
  MatchConfig config;
  config.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long matched = 0;
    for (const auto &p : pairs) matched += MatchForms(p.sys, p.gold, config).matched;
    benchmark::DoNotOptimize(matched);
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}
BENCHMARK(BM_MatchForms)->Arg(1)->Arg(5)->Arg(10)->Arg(20)->Arg(50);

void BM_OptimalMatch(benchmark::State &state) {
  const auto pairs = MakePairs(32, static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    long matched = 0;
    for (const auto &p : pairs) matched += OptimalMatch(p.sys, p.gold).matched;
    benchmark::DoNotOptimize(matched);
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}
BENCHMARK(BM_OptimalMatch)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
}  // namespace drs

BENCHMARK_MAIN();
