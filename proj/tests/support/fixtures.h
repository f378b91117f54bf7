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

#ifndef DRS_TESTS_SUPPORT_FIXTURES_H_
#define DRS_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "drs/clause.h"
#include "drs/clause_io.h"

namespace drs::testing {

inline std::string FixturePath(const std::string &name) {
  return std::string(DRS_FIXTURE_DIR) + "/" + name;
}

inline std::string FixtureText(const std::string &name) {
  return ReadTextFile(FixturePath(name));
}

inline std::vector<CorpusDocument> FixtureCorpus(const std::string &name) {
  return ParseCorpus(FixtureText(name));
}

// First document of a fixture file.
inline ClausalForm FixtureForm(const std::string &name) {
  return FixtureCorpus(name).at(0).form;
}

inline ClausalForm FormOf(const std::string &text) {
  return ParseDocument(text);
}

}  // namespace drs::testing

#endif  // DRS_TESTS_SUPPORT_FIXTURES_H_
