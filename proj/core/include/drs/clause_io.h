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

#ifndef DRS_CLAUSE_IO_H_
#define DRS_CLAUSE_IO_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drs/clause.h"

namespace drs {

// Plain-text clausal form:
//   - one clause per line, tokens separated by spaces or tabs;
//   - `%` outside a quoted constant starts a comment;
//   - constants are double-quoted and may contain spaces but not quotes;
//   - in corpus files documents are separated by blank lines, and header
//     comments of the form `% key: value` directly above a document's first
//     clause attach metadata to it (`% id: 00/3514` sets its id).

struct LineSpan {
  int first = 0;  // 1-based, inclusive
  int last = 0;
};

struct CorpusDocument {
  std::string doc_id;
  bool explicit_id = false;  // set by a `% id:` header
  std::map<std::string, std::string> attributes;
  ClausalForm form;
  LineSpan source_lines;
};

// Splits one line into clause tokens, quotes kept on constants. Returns an
// empty vector for blank and comment-only lines. Throws kParseError.
std::vector<std::string> TokenizeClauseLine(std::string_view line,
                                            int line_number = 0);

// Parses a single document; blank lines are ignored. Throws kParseError
// carrying the offending line number.
ClausalForm ParseDocument(std::string_view text, std::string doc_id = {});

// Throws kParseError (message names the document index) or kDuplicateDocId.
std::vector<CorpusDocument> ParseCorpus(std::string_view text);

std::string SerializeForm(const ClausalForm &form);

// Documents separated by blank lines; explicit ids are written back as
// `% id:` headers.
std::string SerializeCorpus(std::span<const CorpusDocument> corpus);

// JSON array of {"doc_id": ..., "clauses": [[token, ...], ...]}.
std::string CorpusToJson(std::span<const CorpusDocument> corpus,
                         int indent = -1);

// Reads a whole file, or standard input when `path` is "-".
std::string ReadTextFile(const std::string &path);

}  // namespace drs

#endif  // DRS_CLAUSE_IO_H_
