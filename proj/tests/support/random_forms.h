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

#ifndef DRS_TESTS_SUPPORT_RANDOM_FORMS_H_
#define DRS_TESTS_SUPPORT_RANDOM_FORMS_H_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "drs/clause.h"
#include "drs/normalize.h"
#include "drs/rng.h"

namespace drs::testing {

struct FormShape {
  int max_boxes = 3;
  int max_referents = 3;
  int max_clauses = 12;
  bool allow_dual = false;
};

// Small vocabularies so that random forms share structure.
inline const std::vector<std::pair<std::string, std::string>> &Concepts() {
  static const std::vector<std::pair<std::string, std::string>> kConcepts = {
      {"male", "n.02"},  {"female", "n.02"}, {"time", "n.08"},
      {"smile", "v.01"}, {"dish", "n.01"},   {"flee", "v.01"}};
  return kConcepts;
}

inline const std::vector<std::string> &Roles() {
  static const std::vector<std::string> kRoles = {"Agent", "Theme", "Time",
                                                  "Source"};
  return kRoles;
}

inline Clause RandomClause(Rng &rng, const std::vector<std::string> &boxes,
                           const std::vector<std::string> &refs,
                           bool allow_dual) {
  auto pick = [&](const std::vector<std::string> &v) {
    return v[UniformIndex(rng, v.size())];
  };
  auto var = [](const std::string &s) { return Term::Variable(s); };
  const std::string box = pick(boxes);
  switch (UniformIndex(rng, allow_dual ? 9 : 8)) {
    case 0:
    case 1:
      return Clause(box, ClauseTag::MakeOperator(Operator::kREF),
                    {var(pick(refs))});
    case 2:
    case 3: {
      const auto &[lemma, sense] = Concepts()[UniformIndex(rng, Concepts().size())];
      return Clause(box, ClauseTag::MakeConcept(lemma, sense),
                    {var(pick(refs))});
    }
    case 4:
      return Clause(box, ClauseTag::MakeRole(pick(Roles())),
                    {var(pick(refs)), var(pick(refs))});
    case 5:
      return Clause(box, ClauseTag::MakeRole("Name"),
                    {var(pick(refs)), Term::Constant(
                                          UniformIndex(rng, 2) ? "tom" : "mary")});
    case 6:
      return Clause(box, ClauseTag::MakeOperator(Operator::kTPR),
                    {var(pick(refs)), Term::Constant("now")});
    case 7:
      return Clause(box, ClauseTag::MakeOperator(
                             UniformIndex(rng, 2) ? Operator::kNOT
                                                  : Operator::kPOS),
                    {var(pick(boxes))});
    default:
      // PRP over a box name makes that variable dual.
      return Clause(box, ClauseTag::MakeOperator(Operator::kPRP),
                    {var(pick(boxes))});
  }
}

inline std::vector<std::string> Names(const std::string &prefix, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline ClausalForm RandomForm(Rng &rng, const FormShape &shape = {}) {
  const auto boxes = Names("b", 1 + static_cast<int>(UniformIndex(
                                        rng, shape.max_boxes)));
  const auto refs = Names("x", 1 + static_cast<int>(UniformIndex(
                                       rng, shape.max_referents)));
  const int n = 1 + static_cast<int>(UniformIndex(rng, shape.max_clauses));
  std::vector<Clause> clauses;
  for (int i = 0; i < n; ++i) {
    clauses.push_back(RandomClause(rng, boxes, refs, shape.allow_dual));
  }
  return ClausalForm(std::move(clauses));
}

// Random renaming of every variable to fresh names, with clause order
// preserved.
inline ClausalForm RandomRename(Rng &rng, const ClausalForm &form,
                                const std::string &prefix) {
  std::vector<std::string> names;
  for (const auto &[name, kind] : form.variables()) names.push_back(name);
  std::vector<int> order(names.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[UniformIndex(rng, i)]);
  }
  std::map<std::string, std::string> renaming;
  for (size_t i = 0; i < names.size(); ++i) {
    renaming[names[i]] = prefix + std::to_string(order[i]);
  }
  return RenameVariables(form, renaming);
}

// A perturbed copy: renamed, shuffled, with a few clauses dropped and a few
// random ones added over the same variables.
inline ClausalForm Perturb(Rng &rng, const ClausalForm &form,
                           const FormShape &shape = {}) {
  ClausalForm renamed = RandomRename(rng, form, "v");
  std::vector<Clause> clauses = renamed.clauses();
  for (size_t i = clauses.size(); i > 1; --i) {
    std::swap(clauses[i - 1], clauses[UniformIndex(rng, i)]);
  }
  const size_t drop = UniformIndex(rng, 3);
  for (size_t i = 0; i < drop && clauses.size() > 1; ++i) clauses.pop_back();
  std::vector<std::string> boxes, refs;
  for (const auto &[name, kind] : renamed.variables()) {
    (kind == VariableKind::kReferent ? refs : boxes).push_back(name);
  }
  if (refs.empty()) refs.push_back("v_r");
  if (boxes.empty()) boxes.push_back("v_b");
  const size_t add = UniformIndex(rng, 3);
  for (size_t i = 0; i < add; ++i) {
    if (static_cast<int>(clauses.size()) >= shape.max_clauses) break;
    clauses.push_back(RandomClause(rng, boxes, refs, false));
  }
  return ClausalForm(std::move(clauses));
}

}  // namespace drs::testing

#endif  // DRS_TESTS_SUPPORT_RANDOM_FORMS_H_
