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

#ifndef DRS_MAPPING_H_
#define DRS_MAPPING_H_

#include <map>
#include <optional>
#include <string>

namespace drs {

// Partial injective map from source variable names to target variable
// names. Kind constraints need both forms and are checked by the matcher.
class VariableMapping {
 public:
  // Adds s -> t. Returns false (and leaves the mapping unchanged) if s is
  // already mapped or t is already taken.
  bool Add(const std::string &source, const std::string &target);

  std::optional<std::string> TargetOf(const std::string &source) const;
  bool HasTarget(const std::string &target) const {
    return backward_.contains(target);
  }

  const std::map<std::string, std::string> &pairs() const { return forward_; }
  size_t size() const { return forward_.size(); }
  bool empty() const { return forward_.empty(); }

  bool operator==(const VariableMapping &other) const {
    return forward_ == other.forward_;
  }

  std::string ToString() const;  // "{k0->b0, e1->v1}"

 private:
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;
};

}  // namespace drs

#endif  // DRS_MAPPING_H_
