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

#include <cctype>
#include <optional>
#include <regex>
#include <set>

#include "drs/error.h"

namespace drs {
namespace {

enum class TokenType { kOpen, kClose, kSlash, kRole, kSymbol, kString, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
};

class PenmanLexer {
 public:
  explicit PenmanLexer(std::string_view text) : text_(text) {}

  Token Next() {
    SkipSpace();
    if (pos_ >= text_.size()) return {TokenType::kEnd, ""};
    const char c = text_[pos_];
    if (c == '(') return Single(TokenType::kOpen);
    if (c == ')') return Single(TokenType::kClose);
    if (c == '/') return Single(TokenType::kSlash);
    if (c == '"') {
      const size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) Fail("unterminated string");
      Token token{TokenType::kString,
                  std::string(text_.substr(pos_ + 1, close - pos_ - 1))};
      pos_ = close + 1;
      return token;
    }
    const size_t start = pos_;
    while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word.front() == ':') {
      if (word.size() == 1) Fail("empty relation");
      return {TokenType::kRole, std::move(word)};
    }
    return {TokenType::kSymbol, std::move(word)};
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw Error(ErrorCode::kParseError,
                "PENMAN offset " + std::to_string(pos_) + ": " + message);
  }

 private:
  static bool IsDelimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == '"';
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && (pos_ == 0 || text_[pos_ - 1] == '\n')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Token Single(TokenType type) {
    return {type, std::string(1, text_[pos_++])};
  }

  std::string_view text_;
  size_t pos_ = 0;
};

// Edge value before symbols are resolved against the declared node ids.
struct RawEdge {
  AmrEdge edge;
  bool is_symbol = false;
};

class PenmanParser {
 public:
  explicit PenmanParser(std::string_view text) : lexer_(text) {
    Advance();
  }

  AmrGraph Parse() {
    if (current_.type != TokenType::kOpen) lexer_.Fail("expected '('");
    graph_.root = ParseNode();
    if (current_.type != TokenType::kEnd) {
      lexer_.Fail("unexpected '" + current_.text + "' after the graph");
    }
    const std::set<std::string> ids(declared_.begin(), declared_.end());
    std::regex inverse(R"(:(ARG\d+)-of)");
    for (auto &raw : edges_) {
      AmrEdge edge = std::move(raw.edge);
      if (raw.is_symbol) edge.target_is_constant = !ids.contains(edge.target);
      std::smatch m;
      if (!edge.target_is_constant &&
          std::regex_match(edge.relation, m, inverse)) {
        edge.relation = ":" + m[1].str();
        std::swap(edge.source, edge.target);
      }
      graph_.edges.push_back(std::move(edge));
    }
    return std::move(graph_);
  }

 private:
  void Advance() { current_ = lexer_.Next(); }

  std::string ParseNode() {
    Advance();  // '('
    if (current_.type != TokenType::kSymbol) lexer_.Fail("expected node id");
    AmrNode node;
    node.id = current_.text;
    node.position = position_++;
    Advance();
    if (current_.type != TokenType::kSlash) {
      lexer_.Fail("expected '/' after " + node.id);
    }
    Advance();
    if (current_.type != TokenType::kSymbol &&
        current_.type != TokenType::kString) {
      lexer_.Fail("expected concept for " + node.id);
    }
    node.concept_label = current_.text;
    Advance();
    if (std::find(declared_.begin(), declared_.end(), node.id) !=
        declared_.end()) {
      lexer_.Fail("node " + node.id + " defined twice");
    }
    declared_.push_back(node.id);
    const std::string id = node.id;
    graph_.nodes.push_back(std::move(node));

    while (current_.type == TokenType::kRole) {
      RawEdge raw;
      raw.edge.source = id;
      raw.edge.relation = current_.text;
      raw.edge.position = position_++;
      Advance();
      const size_t slot = edges_.size();
      edges_.push_back(raw);
      switch (current_.type) {
        case TokenType::kOpen:
          edges_[slot].edge.target = ParseNode();
          break;
        case TokenType::kString:
          edges_[slot].edge.target = current_.text;
          edges_[slot].edge.target_is_constant = true;
          Advance();
          break;
        case TokenType::kSymbol:
          edges_[slot].edge.target = current_.text;
          edges_[slot].is_symbol = true;
          Advance();
          break;
        default:
          lexer_.Fail("missing value for " + raw.edge.relation);
      }
    }
    if (current_.type != TokenType::kClose) {
      lexer_.Fail(current_.type == TokenType::kEnd
                      ? "unbalanced parentheses"
                      : "unexpected '" + current_.text + "'");
    }
    Advance();
    return id;
  }

  PenmanLexer lexer_;
  Token current_;
  AmrGraph graph_;
  std::vector<std::string> declared_;
  std::vector<RawEdge> edges_;
  int position_ = 0;
};

std::optional<std::pair<std::string, std::string>> SplitConcept(
    const std::string &tag) {
  // lemma.p.NN
  if (tag.size() < 6) return std::nullopt;
  const std::string sense = tag.substr(tag.size() - 4);
  if (tag[tag.size() - 5] != '.' || !IsWellFormedSense(sense)) {
    return std::nullopt;
  }
  return std::make_pair(tag.substr(0, tag.size() - 5), sense);
}

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

const AmrNode *AmrGraph::FindNode(const std::string &id) const {
  for (const auto &node : nodes) {
    if (node.id == id) return &node;
  }
  return nullptr;
}

AmrGraph ParsePenman(std::string_view text) {
  return PenmanParser(text).Parse();
}

std::vector<PenmanBlock> ParsePenmanCorpus(std::string_view text) {
  std::vector<PenmanBlock> blocks;
  std::string current;
  std::string id;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) {
      PenmanBlock block;
      block.id = id.empty() ? std::to_string(blocks.size() + 1) : id;
      try {
        block.graph = ParsePenman(current);
      } catch (const Error &e) {
        throw Error(ErrorCode::kParseError,
                    "graph " + std::to_string(blocks.size() + 1) + ": " +
                        e.what());
      }
      blocks.push_back(std::move(block));
    }
    current.clear();
    id.clear();
    has_content = false;
  };
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = TrimView(text.substr(start, end - start));
    if (line.empty()) {
      flush();
    } else if (line.front() == '#') {
      const size_t at = line.find("::id ");
      if (at != std::string_view::npos) {
        std::string_view rest = TrimView(line.substr(at + 5));
        id = std::string(rest.substr(0, rest.find_first_of(" \t")));
      }
    } else {
      current.append(line);
      current.push_back('\n');
      has_content = true;
    }
    start = end + 1;
  }
  flush();
  return blocks;
}

ConversionDictionary ConversionDictionary::Default() {
  ConversionDictionary dict;
  dict.relations = {{":ARG0", "Agent"}, {":ARG1", "Patient"},
                    {":ARG2", "Theme"}};
  dict.concepts = {{"she", {"female", "n.02"}},
                   {"he", {"male", "n.02"}},
                   {"it", {"thing", "n.12"}},
                   {"they", {"person", "n.01"}}};
  return dict;
}

void ConversionDictionary::Load(std::string_view tsv) {
  int line_number = 0;
  size_t start = 0;
  while (start < tsv.size()) {
    size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimView(line).empty() || TrimView(line).front() == '#') continue;

    std::vector<std::string> fields;
    size_t field_start = 0;
    while (true) {
      const size_t tab = line.find('\t', field_start);
      fields.emplace_back(TrimView(line.substr(field_start, tab - field_start)));
      if (tab == std::string_view::npos) break;
      field_start = tab + 1;
    }
    auto fail = [&](const std::string &message) {
      throw Error(ErrorCode::kParseError,
                  "dictionary line " + std::to_string(line_number) + ": " +
                      message,
                  line_number);
    };
    if (fields.size() != 3) fail("expected kind<TAB>source<TAB>target");
    const auto &[kind, source, target] =
        std::tie(fields[0], fields[1], fields[2]);
    if (kind == "rel") {
      if (!IsRoleName(target)) fail("'" + target + "' is not a role name");
      relations[source.front() == ':' ? source : ":" + source] = target;
    } else if (kind == "concept") {
      auto concept_tag = SplitConcept(target);
      if (!concept_tag) fail("'" + target + "' is not of the form lemma.p.NN");
      concepts[source] = *concept_tag;
    } else {
      fail("unknown entry kind '" + kind + "'");
    }
  }
}

std::string ConversionDictionary::RoleFor(const std::string &relation) const {
  if (auto it = relations.find(relation); it != relations.end()) {
    return it->second;
  }
  static const std::regex kArgument(R"(:ARG\d+)");
  if (std::regex_match(relation, kArgument)) return {};
  std::string role;
  bool capitalize = true;
  for (char c : std::string_view(relation).substr(relation.front() == ':')) {
    if (c == '-') {
      capitalize = true;
      continue;
    }
    role += capitalize ? static_cast<char>(std::toupper(
                             static_cast<unsigned char>(c)))
                       : c;
    capitalize = false;
  }
  return IsRoleName(role) ? role : std::string();
}

Conversion AmrToDrs(const AmrGraph &graph,
                    const ConversionDictionary &dictionary,
                    UnmappedPolicy policy) {
  static const std::regex kVerb(R"((.+)-(\d\d))");

  struct NodeInfo {
    std::string referent;
    std::string box;
    std::string lemma;
    std::string sense;
    bool verb = false;
  };
  std::map<std::string, NodeInfo> info;
  int next_box = 1;
  const AmrNode *first_verb = nullptr;
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    const AmrNode &node = graph.nodes[i];
    NodeInfo ni;
    ni.referent = "x" + std::to_string(i + 1);
    std::smatch m;
    ni.verb = std::regex_match(node.concept_label, m, kVerb);
    if (auto it = dictionary.concepts.find(node.concept_label);
        it != dictionary.concepts.end()) {
      ni.lemma = it->second.first;
      ni.sense = it->second.second;
    } else if (ni.verb) {
      ni.lemma = m[1].str();
      ni.sense = dictionary.verb_sense;
    } else {
      ni.lemma = node.concept_label;
      ni.sense = dictionary.noun_sense;
    }
    if (ni.verb) {
      ni.box = "b0";
      if (!first_verb) first_verb = &node;
    } else {
      ni.box = "b" + std::to_string(next_box++);
    }
    info.emplace(node.id, std::move(ni));
  }
  const std::string time_box = "b" + std::to_string(next_box);
  const std::string time_referent =
      "x" + std::to_string(graph.nodes.size() + 1);

  Conversion conversion;
  std::vector<Clause> clauses;
  auto emit_node = [&](const AmrNode &node) {
    const NodeInfo &ni = info.at(node.id);
    clauses.emplace_back(ni.box, ClauseTag::MakeOperator(Operator::kREF),
                         std::vector<Term>{Term::Variable(ni.referent)});
    clauses.emplace_back(ni.box, ClauseTag::MakeConcept(ni.lemma, ni.sense),
                         std::vector<Term>{Term::Variable(ni.referent)});
    if (&node == first_verb) {
      const std::vector<Term> t = {Term::Variable(time_referent)};
      clauses.emplace_back(time_box, ClauseTag::MakeOperator(Operator::kREF),
                           t);
      clauses.emplace_back(
          time_box, ClauseTag::MakeOperator(Operator::kTPR),
          std::vector<Term>{Term::Variable(time_referent),
                            Term::Constant("now")});
      clauses.emplace_back(time_box, ClauseTag::MakeConcept("time", "n.08"),
                           t);
      clauses.emplace_back(
          ni.box, ClauseTag::MakeRole("Time"),
          std::vector<Term>{Term::Variable(ni.referent),
                            Term::Variable(time_referent)});
    }
  };
  auto emit_edge = [&](const AmrEdge &edge) {
    const std::string role = dictionary.RoleFor(edge.relation);
    if (role.empty()) {
      const std::string message = "no role for relation " + edge.relation +
                                  " (" + edge.source + " -> " + edge.target +
                                  ")";
      if (policy == UnmappedPolicy::kFail) {
        throw Error(ErrorCode::kUnmappedRelation, message);
      }
      conversion.warnings.push_back(message);
      return;
    }
    const NodeInfo &source = info.at(edge.source);
    const Term target = edge.target_is_constant
                            ? Term::Constant(edge.target)
                            : Term::Variable(info.at(edge.target).referent);
    clauses.emplace_back(
        source.box, ClauseTag::MakeRole(role),
        std::vector<Term>{Term::Variable(source.referent), target});
  };

  size_t n = 0, e = 0;
  while (n < graph.nodes.size() || e < graph.edges.size()) {
    const bool node_next =
        e == graph.edges.size() ||
        (n < graph.nodes.size() &&
         graph.nodes[n].position < graph.edges[e].position);
    if (node_next) {
      emit_node(graph.nodes[n++]);
    } else {
      emit_edge(graph.edges[e++]);
    }
  }
  conversion.form = ClausalForm(std::move(clauses));
  return conversion;
}

}  // namespace drs
