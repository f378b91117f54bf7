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

#ifndef DRS_AMR_H_
#define DRS_AMR_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drs/clause.h"

namespace drs {

struct AmrNode {
  std::string id;
  std::string concept_label;  // e.g. "remove-01", "she"
  int position = 0;           // document order among nodes and edges
};

struct AmrEdge {
  std::string source;
  std::string relation;  // with the leading colon, e.g. ":ARG0"
  std::string target;    // node id, or the constant's value
  bool target_is_constant = false;
  int position = 0;
};

// Rooted graph read from PENMAN notation. Nodes and edges are kept in
// document order; `:ARGn-of` edges are stored reversed as `:ARGn`.
struct AmrGraph {
  std::string root;
  std::vector<AmrNode> nodes;
  std::vector<AmrEdge> edges;

  const AmrNode *FindNode(const std::string &id) const;
};

// Parses one parenthesized PENMAN expression. Quoted strings and symbols
// that name no node become constants. Throws kParseError.
AmrGraph ParsePenman(std::string_view text);

struct PenmanBlock {
  std::string id;  // from a `# ::id` comment, else the 1-based position
  AmrGraph graph;
};

// Graphs separated by blank lines; `#` lines are comments.
std::vector<PenmanBlock> ParsePenmanCorpus(std::string_view text);

// Relation and concept rewrite rules for the AMR converter.
struct ConversionDictionary {
  std::map<std::string, std::string> relations;  // ":ARG0" -> "Agent"
  // AMR concept -> (lemma, sense), e.g. "she" -> ("female", "n.02").
  std::map<std::string, std::pair<std::string, std::string>> concepts;
  std::string verb_sense = "v.01";
  std::string noun_sense = "n.01";

  // :ARG0/1/2 roles plus she, he, it and they.
  static ConversionDictionary Default();

  // Adds tab-separated `kind<TAB>source<TAB>target` lines (kind is `rel` or
  // `concept`), overriding existing entries. Blank lines and lines starting
  // with `#` are skipped. Throws kParseError.
  void Load(std::string_view tsv);

  // Role for an AMR relation: a dictionary entry, or for relations other
  // than `:ARGn` the capitalized relation name (`:part-of` -> `PartOf`).
  // Empty when there is no valid role.
  std::string RoleFor(const std::string &relation) const;
};

enum class UnmappedPolicy { kSkip, kFail };

struct Conversion {
  ClausalForm form;
  std::vector<std::string> warnings;
};

// Rule-based conversion. Every node gets a referent x1, x2, ... (document
// order), a REF clause and a concept clause. Verb nodes (`lemma-NN`) live in
// box b0; every other node gets its own box b1, b2, .... Each edge becomes a
// role clause in its source's box. The first verb receives past tense: a
// fresh time referent in a fresh box with REF, TPR "now" and time.n.08
// clauses, plus a Time role from the verb. Clauses follow document order.
// Throws kUnmappedRelation under UnmappedPolicy::kFail.
Conversion AmrToDrs(const AmrGraph &graph,
                    const ConversionDictionary &dictionary,
                    UnmappedPolicy policy = UnmappedPolicy::kFail);

}  // namespace drs

#endif  // DRS_AMR_H_
