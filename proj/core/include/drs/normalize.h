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

#ifndef DRS_NORMALIZE_H_
#define DRS_NORMALIZE_H_

#include <map>
#include <string>
#include <utility>

#include "drs/clause.h"

namespace drs {

// Bijection from a form's original variable names to standardized ones.
struct RenamingTable {
  std::string prefix;
  std::map<std::string, std::string> forward;  // original -> renamed

  std::map<std::string, std::string> Inverse() const;
};

// Renames every variable to `<prefix><k>`, k counting from 0 in order of
// first occurrence. Clause order and kinds are preserved.
std::pair<ClausalForm, RenamingTable> StandardizeVariables(
    const ClausalForm &form, const std::string &prefix);

// Applies an arbitrary renaming; variables missing from `renaming` keep
// their names. The renaming must be injective on the form's variables.
ClausalForm RenameVariables(const ClausalForm &form,
                            const std::map<std::string, std::string> &renaming);

// A clause `b REF x` is redundant when x occurs as an argument of a concept,
// role or comparison clause labelled by the same box b. Redundant REFs are
// dropped; nothing else changes.
ClausalForm RemoveRedundantRefs(const ClausalForm &form);

}  // namespace drs

#endif  // DRS_NORMALIZE_H_
