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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "drs/error.h"
#include "support/fixtures.h"

namespace drs {
namespace {

using testing::FixtureCorpus;
using testing::FormOf;

Clause Classify(std::vector<std::string> tokens) {
  return ClassifyClause(tokens);
}

ErrorCode ClassifyError(std::vector<std::string> tokens) {
  try {
    ClassifyClause(tokens);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(ClassifyClause, OperatorWithConstant) {
  const Clause c = Classify({"b3", "TPR", "t1", "\"now\""});
  EXPECT_TRUE(c.tag().is(Operator::kTPR));
  EXPECT_EQ(c.box(), "b3");
  ASSERT_EQ(c.args().size(), 2u);
  EXPECT_EQ(c.args()[0], Term::Variable("t1"));
  EXPECT_EQ(c.args()[1], Term::Constant("now"));
}

TEST(ClassifyClause, Role) {
  const Clause c = Classify({"k0", "Agent", "e1", "x1"});
  EXPECT_EQ(c.tag().tag_class, TagClass::kRole);
  EXPECT_EQ(c.tag().name, "Agent");
  EXPECT_EQ(c.box(), "k0");
  EXPECT_EQ(c.args(),
            (std::vector<Term>{Term::Variable("e1"), Term::Variable("x1")}));
}

TEST(ClassifyClause, Concept) {
  const Clause c = Classify({"b2", "hurt", "v.02", "e3"});
  EXPECT_EQ(c.tag().tag_class, TagClass::kConcept);
  EXPECT_EQ(c.tag().name, "hurt");
  EXPECT_EQ(c.tag().sense, "v.02");
  EXPECT_EQ(c.args(), std::vector<Term>{Term::Variable("e3")});
}

TEST(ClassifyClause, DiscourseRelation) {
  const Clause c = Classify({"k0", "CONTINUATION", "k1", "k2"});
  EXPECT_EQ(c.tag().tag_class, TagClass::kRelation);
  EXPECT_EQ(c.ArgSlot(), Slot::kBox);
  EXPECT_EQ(Classify({"k0", "NEGATION", "k1"}).tag().tag_class,
            TagClass::kRelation);
}

TEST(ClassifyClause, Errors) {
  EXPECT_EQ(ClassifyError({"b1", "NOT", "x1", "x2"}), ErrorCode::kWrongArity);
  EXPECT_EQ(ClassifyError({"b1", "REF"}), ErrorCode::kWrongArity);
  EXPECT_EQ(ClassifyError({"b1", "IMP", "b2"}), ErrorCode::kWrongArity);
  EXPECT_EQ(ClassifyError({"b1", "Agent", "e1"}), ErrorCode::kWrongArity);
  EXPECT_EQ(ClassifyError({"\"b1\"", "REF", "x1"}),
            ErrorCode::kConstantInBoxPosition);
  EXPECT_EQ(ClassifyError({"b1", "NOT", "\"b2\""}),
            ErrorCode::kConstantInBoxPosition);
  EXPECT_EQ(ClassifyError({"b1", "REF", "\"x1\""}),
            ErrorCode::kConstantInReferentPosition);
  EXPECT_EQ(ClassifyError({"b1", "smile", "x1"}), ErrorCode::kUnknownTag);
}

TEST(ClassifyClause, TokensRoundTrip) {
  const std::vector<std::string> tokens = {"b2", "Name", "x2",
                                           "\"new york\""};
  EXPECT_EQ(Classify(tokens).Tokens(), tokens);
  EXPECT_EQ(Classify(tokens).ToString(), "b2 Name x2 \"new york\"");
}

TEST(InferVariableKinds, NegatedPossibility) {
  const auto corpus = FixtureCorpus("three_documents.clf");
  const KindTable expected = {{"k0", VariableKind::kBox},
                              {"b2", VariableKind::kBox},
                              {"b3", VariableKind::kBox},
                              {"x1", VariableKind::kReferent},
                              {"e1", VariableKind::kReferent}};
  EXPECT_EQ(corpus.at(0).form.variables(), expected);
}

TEST(InferVariableKinds, PropositionReferentIsDual) {
  const ClausalForm form = FormOf("b1 PRP x6\nx6 DRS b9\n");
  EXPECT_EQ(form.KindOf("x6"), VariableKind::kDual);
  EXPECT_EQ(form.KindOf("b1"), VariableKind::kBox);
  EXPECT_EQ(form.KindOf("b9"), VariableKind::kBox);
}

TEST(InferVariableKinds, EmptyForm) {
  EXPECT_TRUE(InferVariableKinds({}).empty());
  EXPECT_THROW(ClausalForm().KindOf("x1"), std::out_of_range);
}

TEST(ClausalForm, DuplicatesCollapseKeepingFirstOccurrence) {
  const ClausalForm form = FormOf("b1 REF x1\nb1 male n.02 x1\nb1 REF x1\n");
  EXPECT_EQ(form.size(), 2u);
  EXPECT_EQ(form.duplicates_removed(), 1);
  EXPECT_EQ(form.clauses()[0].ToString(), "b1 REF x1");
  const ValidationReport report = ValidateForm(form);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.warnings(), 1u);
}

TEST(ValidateForm, ConditionalDocumentIsClean) {
  const auto corpus = FixtureCorpus("three_documents.clf");
  const ValidationReport report = ValidateForm(corpus.at(1).form);
  EXPECT_EQ(corpus.at(1).form.size(), 10u);
  EXPECT_TRUE(report.violations.empty());
}

TEST(ValidateForm, AllFixtureDocumentsAreValid) {
  for (const char *name : {"three_documents.clf", "smiled_fled.clf", "dishes_en.clf",
                           "dishes_nl.clf", "remove_dishes.clf"}) {
    for (const auto &doc : FixtureCorpus(name)) {
      EXPECT_TRUE(ValidateForm(doc.form).ok()) << name << " " << doc.doc_id;
    }
  }
}

TEST(ValidateForm, UndeclaredReferent) {
  const ValidationReport report = ValidateForm(FormOf("k0 Agent e1 x1\n"));
  EXPECT_FALSE(report.ok());
  bool found = false;
  for (const auto &v : report.violations) {
    if (v.message == "undeclared referent x1") found = true;
  }
  EXPECT_TRUE(found);
}

TEST(ValidateForm, MalformedSense) {
  const ValidationReport report =
      ValidateForm(FormOf("b2 REF e3\nb2 hurt v.2 e3\n"));
  ASSERT_EQ(report.errors(), 1u);
  EXPECT_NE(report.violations[0].message.find("malformed sense v.2"),
            std::string::npos);
}

TEST(ValidateForm, BoxLabellingNothing) {
  const ValidationReport report = ValidateForm(FormOf("b1 NOT b2\n"));
  ASSERT_EQ(report.errors(), 1u);
  EXPECT_EQ(report.violations[0].message, "box b2 labels no clause");
}

TEST(ClausalForm, EqualityIgnoresNothingButDuplicates) {
  EXPECT_EQ(FormOf("b1 REF x1\nb1 REF x1\n"), FormOf("b1 REF x1\n"));
  EXPECT_FALSE(FormOf("b1 REF x1\n") == FormOf("b1 REF x2\n"));
}

TEST(NamePredicates, Classes) {
  EXPECT_TRUE(IsRoleName("Agent"));
  EXPECT_TRUE(IsRoleName("PartOf"));
  EXPECT_FALSE(IsRoleName("agent"));
  EXPECT_FALSE(IsRoleName("REF"));
  EXPECT_TRUE(IsRelationName("CONTINUATION"));
  EXPECT_FALSE(IsRelationName("REF"));
  EXPECT_TRUE(IsWellFormedSense("n.02"));
  EXPECT_FALSE(IsWellFormedSense("v.2"));
  EXPECT_FALSE(IsWellFormedSense("x.01"));
}

}  // namespace
}  // namespace drs
