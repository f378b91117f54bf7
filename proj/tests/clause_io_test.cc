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

#include "drs/clause_io.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "drs/error.h"
#include "support/fixtures.h"

namespace drs {
namespace {

using testing::FixtureCorpus;
using testing::FixtureText;

ErrorCode CorpusError(const std::string &text, int *line = nullptr) {
  try {
    ParseCorpus(text);
  } catch (const Error &e) {
    if (line) *line = e.line();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidCounts;
}

TEST(TokenizeClauseLine, QuotesAndComments) {
  EXPECT_EQ(TokenizeClauseLine("b2 Name x2 \"new york\" % a city"),
            (std::vector<std::string>{"b2", "Name", "x2", "\"new york\""}));
  EXPECT_EQ(TokenizeClauseLine("b1 Name x1 \"50%\""),
            (std::vector<std::string>{"b1", "Name", "x1", "\"50%\""}));
  EXPECT_TRUE(TokenizeClauseLine("   % only a comment").empty());
  EXPECT_THROW(TokenizeClauseLine("b1 Name x1 \"open"), Error);
  EXPECT_THROW(TokenizeClauseLine("b1 Name x1 a\"b\""), Error);
}

TEST(ParseDocument, NegatedPossibilityListing) {
  const std::string text = FixtureText("three_documents.clf");
  const std::string first = text.substr(0, text.find("\n\n") + 1);
  const ClausalForm form = ParseDocument(first);
  EXPECT_EQ(form.size(), 7u);
  std::vector<std::string> names;
  for (const auto &[name, kind] : form.variables()) names.push_back(name);
  std::vector<std::string> expected = {"k0", "b2", "b3", "x1", "e1"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(names, expected);
}

TEST(ParseDocument, EmptyText) { EXPECT_TRUE(ParseDocument("").empty()); }

TEST(ParseDocument, TooManyTokensNamesLine) {
  try {
    ParseDocument("b1 REF x1 x2 x3\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(ParseDocument, ClassificationErrorsBecomeParseErrors) {
  try {
    ParseDocument("b1 REF x1\nb1 NOT x1 x2\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("WrongArity"), std::string::npos);
  }
}

TEST(ParseCorpus, SmiledFledHasTwoDocuments) {
  const auto corpus = FixtureCorpus("smiled_fled.clf");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].doc_id, "01/3445");
  EXPECT_EQ(corpus[1].doc_id, "00/3514");
  EXPECT_TRUE(corpus[0].explicit_id);
  EXPECT_EQ(corpus[0].form.size(), 9u);
  EXPECT_EQ(corpus[1].form.size(), 13u);
}

TEST(ParseCorpus, CommentsOnly) {
  EXPECT_TRUE(ParseCorpus("% nothing here\n\n\n% more\n").empty());
  EXPECT_TRUE(ParseCorpus("").empty());
}

TEST(ParseCorpus, PositionalIdsAndAttributes) {
  const auto corpus =
      ParseCorpus("% length: 4\nb1 REF x1\n\n\nb2 REF x2\nb2 male n.02 x2\n");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].doc_id, "1");
  EXPECT_EQ(corpus[1].doc_id, "2");
  EXPECT_FALSE(corpus[0].explicit_id);
  EXPECT_EQ(corpus[0].attributes.at("length"), "4");
}

TEST(ParseCorpus, DuplicateIds) {
  EXPECT_EQ(CorpusError("% id: 00/3514\nb1 REF x1\n\n% id: 00/3514\nb2 REF "
                        "x2\n"),
            ErrorCode::kDuplicateDocId);
}

TEST(ParseCorpus, ErrorsCarryCorpusLine) {
  int line = 0;
  EXPECT_EQ(CorpusError("b1 REF x1\n\nb1 REF x1\nb1 REF\n", &line),
            ErrorCode::kParseError);
  EXPECT_EQ(line, 4);
}

TEST(SerializeForm, RemoveDishesRoundTrip) {
  const std::string text = FixtureText("remove_dishes.clf");
  const auto corpus = ParseCorpus(text);
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(corpus[0].form.size(), 15u);
  EXPECT_EQ(SerializeCorpus(corpus), text);
  EXPECT_EQ(ParseDocument(SerializeForm(corpus[0].form)), corpus[0].form);
}

TEST(SerializeForm, EmptyForm) { EXPECT_EQ(SerializeForm(ClausalForm()), ""); }

TEST(SerializeForm, ConstantsKeepQuotes) {
  const std::string out = SerializeForm(ParseDocument("b4 EQU t1 \"now\"\n"));
  EXPECT_EQ(out, "b4 EQU t1 \"now\"\n");
}

TEST(SerializeCorpus, RoundTripsEveryFixture) {
  for (const char *name :
       {"three_documents.clf", "smiled_fled.clf", "dishes_en.clf", "dishes_nl.clf"}) {
    const auto corpus = FixtureCorpus(name);
    const auto again = ParseCorpus(SerializeCorpus(corpus));
    ASSERT_EQ(again.size(), corpus.size()) << name;
    for (size_t i = 0; i < corpus.size(); ++i) {
      EXPECT_EQ(again[i].doc_id, corpus[i].doc_id);
      EXPECT_EQ(again[i].form, corpus[i].form);
    }
  }
}

TEST(CorpusToJson, Shape) {
  const auto corpus = ParseCorpus("% id: a\nb1 REF x1\n");
  EXPECT_EQ(CorpusToJson(corpus),
            R"([{"doc_id":"a","clauses":[["b1","REF","x1"]]}])");
}

}  // namespace
}  // namespace drs
