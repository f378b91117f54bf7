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

#include "drs/amr.h"

#include <gtest/gtest.h>

#include <string>

#include "drs/clause_io.h"
#include "drs/error.h"
#include "drs/match.h"
#include "drs/rng.h"
#include "support/fixtures.h"

namespace drs {
namespace {

using testing::FixtureForm;
using testing::FixtureText;

TEST(ParsePenman, RemoveDishesGraph) {
  const auto blocks = ParsePenmanCorpus(FixtureText("remove_dishes.penman"));
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].id, "14/0849");
  const AmrGraph &g = blocks[0].graph;
  EXPECT_EQ(g.root, "r");
  ASSERT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.nodes[0].id, "r");
  EXPECT_EQ(g.nodes[1].id, "s");
  EXPECT_EQ(g.nodes[2].id, "d");
  EXPECT_EQ(g.nodes[3].id, "t");
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[0].relation, ":ARG0");
  EXPECT_EQ(g.edges[1].relation, ":ARG1");
  EXPECT_EQ(g.edges[2].relation, ":ARG2");
}

TEST(ParsePenman, SingleNode) {
  const AmrGraph g = ParsePenman("(a / thing)");
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(ParsePenman, Errors) {
  EXPECT_THROW(ParsePenman("(a / x (b / y)"), Error);
  EXPECT_THROW(ParsePenman("(a / x) (b / y)"), Error);
  EXPECT_THROW(ParsePenman("(a / x :ARG0 (a / y))"), Error);
  EXPECT_THROW(ParsePenman(""), Error);
}

TEST(ParsePenman, ReentrancyConstantsAndInverseRoles) {
  const AmrGraph g = ParsePenman(
      "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b) "
      ":polarity - :ARG1-of (s / say-01))");
  EXPECT_EQ(g.nodes.size(), 4u);
  ASSERT_EQ(g.edges.size(), 5u);
  EXPECT_EQ(g.edges[2].source, "g");
  EXPECT_EQ(g.edges[2].target, "b");
  EXPECT_FALSE(g.edges[2].target_is_constant);
  EXPECT_TRUE(g.edges[3].target_is_constant);
  EXPECT_EQ(g.edges[3].target, "-");
  EXPECT_EQ(g.edges[4].source, "s");
  EXPECT_EQ(g.edges[4].relation, ":ARG1");
  EXPECT_EQ(g.edges[4].target, "w");
}

TEST(AmrToDrs, RemoveDishesExactListing) {
  const auto blocks = ParsePenmanCorpus(FixtureText("remove_dishes.penman"));
  const Conversion c =
      AmrToDrs(blocks[0].graph, ConversionDictionary::Default());
  EXPECT_TRUE(c.warnings.empty());
  EXPECT_EQ(c.form.size(), 15u);
  EXPECT_EQ(SerializeForm(c.form), SerializeForm(FixtureForm("remove_dishes.clf")));
}

TEST(AmrToDrs, RemoveDishesAlphaEquivalent) {
  const auto blocks = ParsePenmanCorpus(FixtureText("remove_dishes.penman"));
  const Conversion c =
      AmrToDrs(blocks[0].graph, ConversionDictionary::Default());
  MatchConfig config;
  config.keep_refs = true;
  EXPECT_DOUBLE_EQ(MatchForms(c.form, FixtureForm("remove_dishes.clf"), config).f1,
                   1.0);
}

TEST(AmrToDrs, PronounWithoutVerb) {
  const Conversion c =
      AmrToDrs(ParsePenman("(s / she)"), ConversionDictionary::Default());
  EXPECT_EQ(SerializeForm(c.form), "b1 REF x1\nb1 female n.02 x1\n");
}

TEST(AmrToDrs, UnmappedRelation) {
  const AmrGraph g = ParsePenman("(r / run-02 :ARG9 (b / boy))");
  try {
    AmrToDrs(g, ConversionDictionary::Default(), UnmappedPolicy::kFail);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnmappedRelation);
  }
  const Conversion skipped =
      AmrToDrs(g, ConversionDictionary::Default(), UnmappedPolicy::kSkip);
  EXPECT_EQ(skipped.warnings.size(), 1u);
  EXPECT_EQ(skipped.form.size(), 8u);
}

TEST(ConversionDictionary, Roles) {
  const ConversionDictionary d = ConversionDictionary::Default();
  EXPECT_EQ(d.RoleFor(":ARG0"), "Agent");
  EXPECT_EQ(d.RoleFor(":ARG2"), "Theme");
  EXPECT_EQ(d.RoleFor(":part-of"), "PartOf");
  EXPECT_EQ(d.RoleFor(":location"), "Location");
  EXPECT_EQ(d.RoleFor(":ARG4"), "");
}

TEST(ConversionDictionary, Load) {
  ConversionDictionary d = ConversionDictionary::Default();
  d.Load("# extra\nrel\t:ARG4\tDestination\nconcept\tdish\tplate.n.02\n");
  EXPECT_EQ(d.RoleFor(":ARG4"), "Destination");
  const Conversion c = AmrToDrs(ParsePenman("(d / dish)"), d);
  EXPECT_EQ(SerializeForm(c.form), "b1 REF x1\nb1 plate n.02 x1\n");
  EXPECT_THROW(d.Load("rel\t:ARG5\n"), Error);
}

// Random trees of verbs and nouns without reentrancies, where every edge
// maps to a role.
std::string RandomTree(Rng &rng, int &next, int depth, int *nodes, int *edges,
                       bool *has_verb) {
  static const char *kVerbs[] = {"run-02", "see-01", "give-01"};
  static const char *kNouns[] = {"boy", "girl", "she", "dish", "table"};
  const bool verb = UniformIndex(rng, 2) == 0;
  const std::string id = "n" + std::to_string(next++);
  std::string out = "(" + id + " / " +
                    (verb ? kVerbs[UniformIndex(rng, 3)]
                          : kNouns[UniformIndex(rng, 5)]);
  ++*nodes;
  *has_verb = *has_verb || verb;
  const size_t children = depth > 0 ? UniformIndex(rng, 3) : 0;
  for (size_t i = 0; i < children; ++i) {
    out += " :ARG" + std::to_string(i) + " " +
           RandomTree(rng, next, depth - 1, nodes, edges, has_verb);
    ++*edges;
  }
  return out + ")";
}

TEST(AmrToDrs, ClauseCountProperty) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    int next = 0, nodes = 0, edges = 0;
    bool has_verb = false;
    const std::string text =
        RandomTree(rng, next, 3, &nodes, &edges, &has_verb);
    const Conversion c =
        AmrToDrs(ParsePenman(text), ConversionDictionary::Default());
    EXPECT_EQ(static_cast<int>(c.form.size()),
              2 * nodes + edges + (has_verb ? 4 : 0))
        << text;
    EXPECT_TRUE(ValidateForm(c.form).ok()) << text;
  }
}

}  // namespace
}  // namespace drs
