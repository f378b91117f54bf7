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

#ifndef DRS_PARALLEL_H_
#define DRS_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace drs {

// Runs fn(i) for every i in [0, n) on up to `workers` threads. Each index
// writes only its own output slot, so results come back in index order
// whatever the scheduling. If any call throws, the exception from the
// lowest failing index is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(size_t n, int workers, Fn &&fn) {
  const size_t threads =
      std::min(n, static_cast<size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto &error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace drs

#endif  // DRS_PARALLEL_H_
