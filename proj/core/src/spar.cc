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

#include "drs/spar.h"

#include <algorithm>
#include <utility>

#include "drs/error.h"
#include "drs/parallel.h"

namespace drs {

SparSelection SelectSpar(std::span<const ClausalForm> corpus,
                         const MatchConfig &config, int parallel) {
  const size_t n = corpus.size();
  if (n < 2) {
    throw Error(ErrorCode::kCorpusTooSmall,
                "SPAR selection needs at least two documents");
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> scores(pairs.size());
  ParallelFor(pairs.size(), parallel, [&](size_t k) {
    const auto [i, j] = pairs[k];
    const double forward = MatchForms(corpus[i], corpus[j], config).f1;
    const double backward = MatchForms(corpus[j], corpus[i], config).f1;
    scores[k] = std::max(forward, backward);
  });

  SparSelection selection;
  selection.mean_f1_per_doc.assign(n, 0.0);
  for (size_t k = 0; k < pairs.size(); ++k) {
    selection.mean_f1_per_doc[pairs[k].first] += scores[k];
    selection.mean_f1_per_doc[pairs[k].second] += scores[k];
  }
  for (double &mean : selection.mean_f1_per_doc) {
    mean /= static_cast<double>(n - 1);
  }
  selection.index = static_cast<size_t>(
      std::max_element(selection.mean_f1_per_doc.begin(),
                       selection.mean_f1_per_doc.end()) -
      selection.mean_f1_per_doc.begin());
  selection.mean_f1 = selection.mean_f1_per_doc[selection.index];
  return selection;
}

}  // namespace drs
