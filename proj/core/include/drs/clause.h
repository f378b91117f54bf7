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

#ifndef DRS_CLAUSE_H_
#define DRS_CLAUSE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drs {

// Kind of a variable, derived from the positions it occupies.
enum class VariableKind { kBox, kReferent, kDual };

const char *VariableKindName(VariableKind kind);

// A clause argument: either a variable name or a constant. Constants are
// stored without their surrounding quotes, so `now` and `"now"` differ only
// in the flag.
struct Term {
  std::string text;
  bool constant = false;

  static Term Variable(std::string name) { return {std::move(name), false}; }
  static Term Constant(std::string value) { return {std::move(value), true}; }

  // Token as it appears in the clausal-form file.
  std::string Token() const;

  auto operator<=>(const Term &) const = default;
};

enum class Operator {
  kREF, kNOT, kPOS, kNEC, kEQU, kNEQ, kAPX, kLES, kLEQ, kTPR, kTAB,
  kIMP, kDIS, kPRP, kDRS,
};

// Returns the operator named by `token`, if it is one of the fifteen DRS
// operators.
std::optional<Operator> ParseOperator(std::string_view token);
const char *OperatorName(Operator op);

// Comparison operators form basic conditions together with roles and
// concepts.
bool IsComparison(Operator op);

enum class TagClass { kOperator, kRole, kConcept, kRelation };

// The second token of a clause, resolved into its class. For concepts
// `name` holds the lemma and `sense` the `p.NN` token.
struct ClauseTag {
  TagClass tag_class = TagClass::kOperator;
  Operator op = Operator::kREF;  // only meaningful for kOperator
  std::string name;
  std::string sense;

  static ClauseTag MakeOperator(Operator op);
  static ClauseTag MakeRole(std::string name);
  static ClauseTag MakeConcept(std::string lemma, std::string sense);
  static ClauseTag MakeRelation(std::string name);

  bool is(Operator o) const {
    return tag_class == TagClass::kOperator && op == o;
  }

  auto operator<=>(const ClauseTag &) const = default;
};

// Role names start with an uppercase letter and contain a lowercase one.
bool IsRoleName(std::string_view token);

// Discourse relations are all-uppercase tokens outside the operator set.
bool IsRelationName(std::string_view token);

// True for the canonical sense shape: one of n/v/a/r, a dot, two digits.
bool IsWellFormedSense(std::string_view token);

// Argument slot semantics, used for kind inference.
enum class Slot { kBox, kReferent };

// One flat DRS condition: a box label, a tag and two or three arguments.
class Clause {
 public:
  Clause(std::string box, ClauseTag tag, std::vector<Term> args);

  const std::string &box() const { return box_; }
  const ClauseTag &tag() const { return tag_; }
  const std::vector<Term> &args() const { return args_; }

  // Slot kind shared by all arguments of this clause.
  Slot ArgSlot() const;

  // Tokens exactly as they would be written to a file.
  std::vector<std::string> Tokens() const;
  std::string ToString() const;

  auto operator<=>(const Clause &) const = default;

 private:
  std::string box_;
  ClauseTag tag_;
  std::vector<Term> args_;
};

// Classifies a tokenized clause line. Quoted tokens (with their surrounding
// double quotes) become constants, every other token is a variable, except
// the tag token and a concept's sense token.
// Throws drs::Error with kWrongArity, kUnknownTag, kConstantInBoxPosition or
// kConstantInReferentPosition.
Clause ClassifyClause(std::span<const std::string> tokens);

using KindTable = std::map<std::string, VariableKind>;

// Box positions: clause-initial labels and the box arguments of NOT, POS,
// NEC, IMP, DIS, DRS and discourse relations. Everything else that is a
// variable is a referent position. Variables seen in both become kDual.
KindTable InferVariableKinds(std::span<const Clause> clauses);

// A DRS in clausal form. Duplicate clauses collapse on construction (the
// form is a set) but document order of first occurrences is kept.
class ClausalForm {
 public:
  ClausalForm() = default;
  explicit ClausalForm(std::vector<Clause> clauses, std::string doc_id = {});

  const std::vector<Clause> &clauses() const { return clauses_; }
  const KindTable &variables() const { return variables_; }
  const std::string &doc_id() const { return doc_id_; }
  size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  // Number of duplicate clauses dropped while building the form.
  int duplicates_removed() const { return duplicates_removed_; }

  VariableKind KindOf(const std::string &variable) const;

  // Equality over clauses (in order) and the kind table; doc_id and
  // duplicate bookkeeping are ignored.
  bool operator==(const ClausalForm &other) const {
    return clauses_ == other.clauses_ && variables_ == other.variables_;
  }

 private:
  std::vector<Clause> clauses_;
  KindTable variables_;
  std::string doc_id_;
  int duplicates_removed_ = 0;
};

enum class Severity { kError, kWarning };

struct Violation {
  Severity severity = Severity::kError;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const;  // no kError entries
  size_t errors() const;
  size_t warnings() const;
};

// Structural checks: referents used in basic conditions but never
// introduced by REF, box arguments that label no clause, malformed senses,
// and duplicate clauses (warning).
ValidationReport ValidateForm(const ClausalForm &form);

}  // namespace drs

#endif  // DRS_CLAUSE_H_
