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

#ifndef DRS_TESTS_SUPPORT_PROPERTIES_H_
#define DRS_TESTS_SUPPORT_PROPERTIES_H_

#include <optional>
#include <string>

#include "drs/clause_io.h"
#include "drs/match.h"
#include "drs/normalize.h"
#include "drs/oracle.h"
#include "drs/rng.h"
#include "support/random_forms.h"

namespace drs::testing {

// Each check draws its inputs from `rng` and returns a description of the
// first counterexample, or nothing.
using Failure = std::optional<std::string>;

inline std::string Show(const ClausalForm &form) { return SerializeForm(form); }

// Renaming variables without reordering clauses leaves every score intact.
inline Failure CheckAlphaInvariance(Rng &rng) {
  const ClausalForm a = RandomForm(rng);
  const ClausalForm b = Perturb(rng, a);
  const ClausalForm a2 = RandomRename(rng, a, "q");
  const ClausalForm b2 = RandomRename(rng, b, "w");
  MatchConfig config;
  config.restarts = 4;
  const MatchResult r1 = MatchForms(a, b, config);
  const MatchResult r2 = MatchForms(a2, b2, config);
  if (r1.matched != r2.matched) {
    return "matched " + std::to_string(r1.matched) + " vs " +
           std::to_string(r2.matched) + " after renaming\n" + Show(a) +
           "--\n" + Show(b);
  }
  if (OptimalMatch(a, b).matched != OptimalMatch(a2, b2).matched) {
    return "optimum changes after renaming\n" + Show(a) + "--\n" + Show(b);
  }
  return std::nullopt;
}

// Swapping system and gold swaps precision and recall and keeps F1.
inline Failure CheckSymmetry(Rng &rng) {
  const ClausalForm a = RandomForm(rng);
  const ClausalForm b = Perturb(rng, a);
  const MatchResult ab = OptimalMatch(a, b);
  const MatchResult ba = OptimalMatch(b, a);
  if (ab.matched != ba.matched || ab.f1 != ba.f1 ||
      ab.precision != ba.recall || ab.recall != ba.precision) {
    return "asymmetric optimum\n" + Show(a) + "--\n" + Show(b);
  }
  return std::nullopt;
}

// More restarts never lower the matched count.
inline Failure CheckRestartMonotonicity(Rng &rng) {
  const ClausalForm a = RandomForm(rng);
  const ClausalForm b = Perturb(rng, a);
  int previous = -1;
  for (int restarts : {1, 2, 4, 8}) {
    MatchConfig config;
    config.restarts = restarts;
    const int matched = MatchForms(a, b, config).matched;
    if (matched < previous) {
      return std::to_string(restarts) + " restarts matched " +
             std::to_string(matched) + " < " + std::to_string(previous) +
             "\n" + Show(a) + "--\n" + Show(b);
    }
    previous = matched;
  }
  return std::nullopt;
}

inline Failure CheckRefRemovalIdempotent(Rng &rng) {
  FormShape shape;
  shape.allow_dual = true;
  const ClausalForm form = RandomForm(rng, shape);
  const ClausalForm once = RemoveRedundantRefs(form);
  if (!(RemoveRedundantRefs(once) == once)) {
    return "second removal changed the form\n" + Show(form);
  }
  return std::nullopt;
}

inline Failure CheckRoundTrip(Rng &rng) {
  FormShape shape;
  shape.allow_dual = true;
  const ClausalForm form = RandomForm(rng, shape);
  const std::string text = SerializeForm(form);
  const ClausalForm again = ParseDocument(text);
  if (!(again == form) || SerializeForm(again) != text) {
    return "round trip differs\n" + text;
  }
  return std::nullopt;
}

inline Failure CheckSelfMatchUnderOracle(Rng &rng) {
  FormShape shape;
  shape.allow_dual = true;
  const ClausalForm form = RandomForm(rng, shape);
  for (bool keep_refs : {false, true}) {
    const MatchResult r = OptimalMatch(form, form, {}, keep_refs);
    if (r.f1 != 1.0) {
      return "self match F1 " + std::to_string(r.f1) + "\n" + Show(form);
    }
  }
  return std::nullopt;
}

}  // namespace drs::testing

#endif  // DRS_TESTS_SUPPORT_PROPERTIES_H_
