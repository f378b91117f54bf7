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

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "drs/error.h"
#include "json.hpp"

namespace drs {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

bool IsCommentOnly(std::string_view line) {
  std::string_view t = Trim(line);
  return !t.empty() && t.front() == '%';
}

// `% key: value` header; returns false for other comments.
bool ParseHeader(std::string_view line, std::string *key, std::string *value) {
  std::string_view t = Trim(line);
  if (t.empty() || t.front() != '%') return false;
  t = Trim(t.substr(1));
  size_t colon = t.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  std::string_view k = Trim(t.substr(0, colon));
  for (char c : k) {
    if (IsSpace(c)) return false;
  }
  *key = std::string(k);
  *value = std::string(Trim(t.substr(colon + 1)));
  return true;
}

Error LineError(int line, const std::string &message) {
  return Error(ErrorCode::kParseError,
               "line " + std::to_string(line) + ": " + message, line);
}

std::vector<Clause> ParseClauseLines(std::span<const std::string_view> lines,
                                     int first_line) {
  std::vector<Clause> clauses;
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_number = first_line + static_cast<int>(i);
    std::vector<std::string> tokens = TokenizeClauseLine(lines[i], line_number);
    if (tokens.empty()) continue;
    if (tokens.size() < 3 || tokens.size() > 4) {
      throw LineError(line_number, "expected 3 or 4 tokens, found " +
                                       std::to_string(tokens.size()));
    }
    try {
      clauses.push_back(ClassifyClause(tokens));
    } catch (const Error &e) {
      throw LineError(line_number,
                      std::string(ErrorCodeName(e.code())) + ": " + e.what());
    }
  }
  return clauses;
}

}  // namespace

std::vector<std::string> TokenizeClauseLine(std::string_view line,
                                            int line_number) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (c == '%') break;
    if (c == '"') {
      size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw LineError(line_number, "unbalanced quote");
      }
      if (close + 1 < line.size() && !IsSpace(line[close + 1]) &&
          line[close + 1] != '%') {
        throw LineError(line_number, "quote character inside a constant");
      }
      tokens.emplace_back(line.substr(i, close - i + 1));
      i = close + 1;
      continue;
    }
    size_t end = i;
    while (end < line.size() && !IsSpace(line[end]) && line[end] != '%') {
      if (line[end] == '"') {
        throw LineError(line_number, "quote character inside a token");
      }
      ++end;
    }
    tokens.emplace_back(line.substr(i, end - i));
    i = end;
  }
  return tokens;
}

ClausalForm ParseDocument(std::string_view text, std::string doc_id) {
  std::vector<std::string_view> lines = SplitLines(text);
  return ClausalForm(ParseClauseLines(lines, 1), std::move(doc_id));
}

std::vector<CorpusDocument> ParseCorpus(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  std::vector<CorpusDocument> corpus;
  std::set<std::string> ids;
  size_t i = 0;
  while (i < lines.size()) {
    if (IsBlank(lines[i])) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < lines.size() && !IsBlank(lines[i])) ++i;
    std::span<const std::string_view> block(lines.data() + begin, i - begin);

    CorpusDocument doc;
    size_t body = 0;
    while (body < block.size() && IsCommentOnly(block[body])) {
      std::string key, value;
      if (ParseHeader(block[body], &key, &value)) {
        if (key == "id") {
          doc.doc_id = value;
          doc.explicit_id = true;
        } else {
          doc.attributes[key] = value;
        }
      }
      ++body;
    }
    const int first_line = static_cast<int>(begin + body) + 1;
    std::vector<Clause> clauses;
    try {
      clauses = ParseClauseLines(block.subspan(body), first_line);
    } catch (const Error &e) {
      throw Error(ErrorCode::kParseError,
                  "document " + std::to_string(corpus.size() + 1) + ", " +
                      e.what(),
                  e.line());
    }
    // Comment-only blocks without an id are not documents.
    if (clauses.empty() && !doc.explicit_id) continue;
    if (!doc.explicit_id) doc.doc_id = std::to_string(corpus.size() + 1);
    if (!ids.insert(doc.doc_id).second) {
      throw Error(ErrorCode::kDuplicateDocId,
                  "duplicate document id " + doc.doc_id,
                  static_cast<int>(begin) + 1);
    }
    doc.form = ClausalForm(std::move(clauses), doc.doc_id);
    doc.source_lines = {static_cast<int>(begin) + 1, static_cast<int>(i)};
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

std::string SerializeForm(const ClausalForm &form) {
  std::string out;
  for (const auto &clause : form.clauses()) {
    out += clause.ToString();
    out += '\n';
  }
  return out;
}

std::string SerializeCorpus(std::span<const CorpusDocument> corpus) {
  std::string out;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (i > 0) out += '\n';
    if (corpus[i].explicit_id) out += "% id: " + corpus[i].doc_id + "\n";
    out += SerializeForm(corpus[i].form);
  }
  return out;
}

std::string CorpusToJson(std::span<const CorpusDocument> corpus, int indent) {
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const auto &doc : corpus) {
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto &clause : doc.form.clauses()) {
      clauses.push_back(clause.Tokens());
    }
    docs.push_back({{"doc_id", doc.doc_id}, {"clauses", std::move(clauses)}});
  }
  return docs.dump(indent);
}

std::string ReadTextFile(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace drs
