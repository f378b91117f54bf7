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

#include "drs/normalize.h"

#include <set>
#include <stdexcept>
#include <vector>

namespace drs {

std::map<std::string, std::string> RenamingTable::Inverse() const {
  std::map<std::string, std::string> inverse;
  for (const auto &[from, to] : forward) inverse.emplace(to, from);
  return inverse;
}

std::pair<ClausalForm, RenamingTable> StandardizeVariables(
    const ClausalForm &form, const std::string &prefix) {
  if (prefix.empty()) throw std::invalid_argument("empty renaming prefix");
  RenamingTable table;
  table.prefix = prefix;
  auto visit = [&](const std::string &name) {
    if (!table.forward.contains(name)) {
      table.forward.emplace(name,
                            prefix + std::to_string(table.forward.size()));
    }
  };
  for (const auto &clause : form.clauses()) {
    visit(clause.box());
    for (const auto &arg : clause.args()) {
      if (!arg.constant) visit(arg.text);
    }
  }
  return {RenameVariables(form, table.forward), std::move(table)};
}

ClausalForm RenameVariables(
    const ClausalForm &form,
    const std::map<std::string, std::string> &renaming) {
  auto rename = [&](const std::string &name) {
    auto it = renaming.find(name);
    return it == renaming.end() ? name : it->second;
  };
  std::vector<Clause> clauses;
  clauses.reserve(form.size());
  for (const auto &clause : form.clauses()) {
    std::vector<Term> args;
    args.reserve(clause.args().size());
    for (const auto &arg : clause.args()) {
      args.push_back(arg.constant ? arg : Term::Variable(rename(arg.text)));
    }
    clauses.emplace_back(rename(clause.box()), clause.tag(), std::move(args));
  }
  return ClausalForm(std::move(clauses), form.doc_id());
}

ClausalForm RemoveRedundantRefs(const ClausalForm &form) {
  // (box, referent) pairs licensed by a basic condition.
  std::set<std::pair<std::string, std::string>> licensed;
  for (const auto &clause : form.clauses()) {
    const ClauseTag &tag = clause.tag();
    const bool basic = tag.tag_class == TagClass::kConcept ||
                       tag.tag_class == TagClass::kRole ||
                       (tag.tag_class == TagClass::kOperator &&
                        IsComparison(tag.op));
    if (!basic) continue;
    for (const auto &arg : clause.args()) {
      if (!arg.constant) licensed.emplace(clause.box(), arg.text);
    }
  }
  std::vector<Clause> kept;
  for (const auto &clause : form.clauses()) {
    if (clause.tag().is(Operator::kREF) &&
        licensed.contains({clause.box(), clause.args()[0].text})) {
      continue;
    }
    kept.push_back(clause);
  }
  return ClausalForm(std::move(kept), form.doc_id());
}

}  // namespace drs
