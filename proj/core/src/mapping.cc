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

#include "drs/mapping.h"

namespace drs {

bool VariableMapping::Add(const std::string &source,
                          const std::string &target) {
  if (forward_.contains(source) || backward_.contains(target)) return false;
  forward_.emplace(source, target);
  backward_.emplace(target, source);
  return true;
}

std::optional<std::string> VariableMapping::TargetOf(
    const std::string &source) const {
  auto it = forward_.find(source);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::string VariableMapping::ToString() const {
  std::string out = "{";
  for (const auto &[s, t] : forward_) {
    if (out.size() > 1) out += ", ";
    out += s + "->" + t;
  }
  return out + "}";
}

}  // namespace drs
