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

#include "drs/clause.h"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <utility>

#include "drs/error.h"

namespace drs {
namespace {

constexpr std::array<std::pair<Operator, const char *>, 15> kOperators = {{
    {Operator::kREF, "REF"}, {Operator::kNOT, "NOT"}, {Operator::kPOS, "POS"},
    {Operator::kNEC, "NEC"}, {Operator::kEQU, "EQU"}, {Operator::kNEQ, "NEQ"},
    {Operator::kAPX, "APX"}, {Operator::kLES, "LES"}, {Operator::kLEQ, "LEQ"},
    {Operator::kTPR, "TPR"}, {Operator::kTAB, "TAB"}, {Operator::kIMP, "IMP"},
    {Operator::kDIS, "DIS"}, {Operator::kPRP, "PRP"}, {Operator::kDRS, "DRS"},
}};

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsQuoted(const std::string &token) {
  return token.size() >= 2 && token.front() == '"' && token.back() == '"';
}

Term MakeTerm(const std::string &token) {
  if (IsQuoted(token)) {
    return Term::Constant(token.substr(1, token.size() - 2));
  }
  return Term::Variable(token);
}

// Number of arguments each operator takes.
size_t OperatorArity(Operator op) {
  switch (op) {
    case Operator::kREF:
    case Operator::kPRP:
    case Operator::kNOT:
    case Operator::kPOS:
    case Operator::kNEC:
    case Operator::kDRS:
      return 1;
    default:
      return 2;
  }
}

bool TakesBoxArguments(const ClauseTag &tag) {
  if (tag.tag_class == TagClass::kRelation) return true;
  if (tag.tag_class != TagClass::kOperator) return false;
  switch (tag.op) {
    case Operator::kNOT:
    case Operator::kPOS:
    case Operator::kNEC:
    case Operator::kDRS:
    case Operator::kIMP:
    case Operator::kDIS:
      return true;
    default:
      return false;
  }
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

const char *VariableKindName(VariableKind kind) {
  switch (kind) {
    case VariableKind::kBox: return "box";
    case VariableKind::kReferent: return "referent";
    case VariableKind::kDual: return "dual";
  }
  return "?";
}

std::string Term::Token() const {
  return constant ? "\"" + text + "\"" : text;
}

std::optional<Operator> ParseOperator(std::string_view token) {
  for (const auto &[op, name] : kOperators) {
    if (token == name) return op;
  }
  return std::nullopt;
}

const char *OperatorName(Operator op) {
  return kOperators[static_cast<size_t>(op)].second;
}

bool IsComparison(Operator op) {
  switch (op) {
    case Operator::kEQU:
    case Operator::kNEQ:
    case Operator::kAPX:
    case Operator::kLES:
    case Operator::kLEQ:
    case Operator::kTPR:
    case Operator::kTAB:
      return true;
    default:
      return false;
  }
}

ClauseTag ClauseTag::MakeOperator(Operator op) {
  ClauseTag tag;
  tag.tag_class = TagClass::kOperator;
  tag.op = op;
  tag.name = OperatorName(op);
  return tag;
}

ClauseTag ClauseTag::MakeRole(std::string name) {
  ClauseTag tag;
  tag.tag_class = TagClass::kRole;
  tag.name = std::move(name);
  return tag;
}

ClauseTag ClauseTag::MakeConcept(std::string lemma, std::string sense) {
  ClauseTag tag;
  tag.tag_class = TagClass::kConcept;
  tag.name = std::move(lemma);
  tag.sense = std::move(sense);
  return tag;
}

ClauseTag ClauseTag::MakeRelation(std::string name) {
  ClauseTag tag;
  tag.tag_class = TagClass::kRelation;
  tag.name = std::move(name);
  return tag;
}

bool IsRoleName(std::string_view token) {
  if (token.empty() || !IsUpper(token.front())) return false;
  if (token.find('"') != std::string_view::npos) return false;
  return std::any_of(token.begin(), token.end(), IsLower);
}

bool IsRelationName(std::string_view token) {
  if (token.empty() || ParseOperator(token)) return false;
  bool has_upper = false;
  for (char c : token) {
    if (IsUpper(c)) {
      has_upper = true;
    } else if (!IsDigit(c) && c != '_' && c != '-') {
      return false;
    }
  }
  return has_upper;
}

bool IsWellFormedSense(std::string_view token) {
  return token.size() == 4 &&
         (token[0] == 'n' || token[0] == 'v' || token[0] == 'a' ||
          token[0] == 'r') &&
         token[1] == '.' && IsDigit(token[2]) && IsDigit(token[3]);
}

Clause::Clause(std::string box, ClauseTag tag, std::vector<Term> args)
    : box_(std::move(box)), tag_(std::move(tag)), args_(std::move(args)) {}

Slot Clause::ArgSlot() const {
  return TakesBoxArguments(tag_) ? Slot::kBox : Slot::kReferent;
}

std::vector<std::string> Clause::Tokens() const {
  std::vector<std::string> tokens;
  tokens.reserve(4);
  tokens.push_back(box_);
  tokens.push_back(tag_.name);
  if (tag_.tag_class == TagClass::kConcept) tokens.push_back(tag_.sense);
  for (const auto &arg : args_) tokens.push_back(arg.Token());
  return tokens;
}

std::string Clause::ToString() const { return JoinTokens(Tokens()); }

Clause ClassifyClause(std::span<const std::string> tokens) {
  if (tokens.size() < 3 || tokens.size() > 4) {
    throw Error(ErrorCode::kWrongArity,
                "clause must have 3 or 4 tokens: '" + JoinTokens(tokens) + "'");
  }
  for (const auto &t : tokens) {
    if (t.empty()) {
      throw Error(ErrorCode::kUnknownTag, "empty token in clause");
    }
  }
  const std::string &box = tokens[0];
  const std::string &tag_token = tokens[1];
  if (IsQuoted(box)) {
    throw Error(ErrorCode::kConstantInBoxPosition,
                "constant " + box + " used as a box label");
  }
  if (IsQuoted(tag_token)) {
    throw Error(ErrorCode::kUnknownTag,
                "constant " + tag_token + " in tag position");
  }

  ClauseTag tag;
  std::span<const std::string> arg_tokens = tokens.subspan(2);
  if (auto op = ParseOperator(tag_token)) {
    if (arg_tokens.size() != OperatorArity(*op)) {
      throw Error(ErrorCode::kWrongArity,
                  std::string(OperatorName(*op)) + " takes " +
                      std::to_string(OperatorArity(*op)) + " argument(s): '" +
                      JoinTokens(tokens) + "'");
    }
    tag = ClauseTag::MakeOperator(*op);
  } else if (tokens.size() == 4 && !IsQuoted(tokens[2]) &&
             IsWellFormedSense(tokens[2])) {
    tag = ClauseTag::MakeConcept(tag_token, tokens[2]);
    arg_tokens = tokens.subspan(3);
  } else if (IsRoleName(tag_token)) {
    if (arg_tokens.size() != 2) {
      throw Error(ErrorCode::kWrongArity,
                  "role " + tag_token + " takes 2 arguments: '" +
                      JoinTokens(tokens) + "'");
    }
    tag = ClauseTag::MakeRole(tag_token);
  } else if (IsRelationName(tag_token)) {
    tag = ClauseTag::MakeRelation(tag_token);
  } else if (tokens.size() == 4 && !IsQuoted(tokens[2])) {
    // Concept with a malformed sense; ValidateForm reports it.
    tag = ClauseTag::MakeConcept(tag_token, tokens[2]);
    arg_tokens = tokens.subspan(3);
  } else {
    throw Error(ErrorCode::kUnknownTag,
                "cannot classify tag '" + tag_token + "' in '" +
                    JoinTokens(tokens) + "'");
  }

  std::vector<Term> args;
  args.reserve(arg_tokens.size());
  const bool box_args = TakesBoxArguments(tag);
  const bool referent_only =
      tag.is(Operator::kREF) || tag.is(Operator::kPRP);
  for (const auto &token : arg_tokens) {
    Term term = MakeTerm(token);
    if (term.constant && box_args) {
      throw Error(ErrorCode::kConstantInBoxPosition,
                  "constant " + token + " used as a box argument of " +
                      tag_token);
    }
    if (term.constant && referent_only) {
      throw Error(ErrorCode::kConstantInReferentPosition,
                  "constant " + token + " cannot be introduced by " +
                      tag_token);
    }
    args.push_back(std::move(term));
  }
  return Clause(box, std::move(tag), std::move(args));
}

KindTable InferVariableKinds(std::span<const Clause> clauses) {
  std::map<std::string, std::pair<bool, bool>> seen;  // (as box, as referent)
  for (const auto &clause : clauses) {
    seen[clause.box()].first = true;
    for (size_t i = 0; i < clause.args().size(); ++i) {
      const Term &arg = clause.args()[i];
      if (arg.constant) continue;
      auto &flags = seen[arg.text];
      if (clause.ArgSlot() == Slot::kBox) {
        flags.first = true;
      } else {
        flags.second = true;
      }
    }
  }
  KindTable kinds;
  for (const auto &[name, flags] : seen) {
    if (flags.first && flags.second) {
      kinds.emplace(name, VariableKind::kDual);
    } else if (flags.first) {
      kinds.emplace(name, VariableKind::kBox);
    } else {
      kinds.emplace(name, VariableKind::kReferent);
    }
  }
  return kinds;
}

ClausalForm::ClausalForm(std::vector<Clause> clauses, std::string doc_id)
    : doc_id_(std::move(doc_id)) {
  std::set<Clause> seen;
  clauses_.reserve(clauses.size());
  for (auto &clause : clauses) {
    if (seen.insert(clause).second) {
      clauses_.push_back(std::move(clause));
    } else {
      ++duplicates_removed_;
    }
  }
  variables_ = InferVariableKinds(clauses_);
}

VariableKind ClausalForm::KindOf(const std::string &variable) const {
  auto it = variables_.find(variable);
  if (it == variables_.end()) {
    throw std::out_of_range("unknown variable " + variable);
  }
  return it->second;
}

bool ValidationReport::ok() const { return errors() == 0; }

size_t ValidationReport::errors() const {
  return std::count_if(violations.begin(), violations.end(),
                       [](const Violation &v) {
                         return v.severity == Severity::kError;
                       });
}

size_t ValidationReport::warnings() const {
  return violations.size() - errors();
}

ValidationReport ValidateForm(const ClausalForm &form) {
  ValidationReport report;
  std::set<std::string> introduced;
  std::set<std::string> labels;
  for (const auto &clause : form.clauses()) {
    labels.insert(clause.box());
    if (clause.tag().is(Operator::kREF)) introduced.insert(clause.args()[0].text);
  }

  std::set<std::string> reported;
  for (const auto &clause : form.clauses()) {
    const ClauseTag &tag = clause.tag();
    if (tag.tag_class == TagClass::kConcept && !IsWellFormedSense(tag.sense)) {
      report.violations.push_back(
          {Severity::kError, "malformed sense " + tag.sense + " in '" +
                                 clause.ToString() + "'"});
    }
    const bool basic = tag.tag_class == TagClass::kConcept ||
                       tag.tag_class == TagClass::kRole ||
                       (tag.tag_class == TagClass::kOperator &&
                        IsComparison(tag.op));
    for (size_t i = 0; i < clause.args().size(); ++i) {
      const Term &arg = clause.args()[i];
      if (arg.constant) continue;
      if (basic && !introduced.contains(arg.text) &&
          reported.insert("r:" + arg.text).second) {
        report.violations.push_back(
            {Severity::kError, "undeclared referent " + arg.text});
      }
      if (clause.ArgSlot() == Slot::kBox && !labels.contains(arg.text) &&
          reported.insert("b:" + arg.text).second) {
        report.violations.push_back(
            {Severity::kError, "box " + arg.text + " labels no clause"});
      }
    }
  }
  if (form.duplicates_removed() > 0) {
    report.violations.push_back(
        {Severity::kWarning, std::to_string(form.duplicates_removed()) +
                                 " duplicate clause(s) collapsed"});
  }
  return report;
}

}  // namespace drs
