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

#ifndef DRS_RNG_H_
#define DRS_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace drs {

using Rng = std::mt19937_64;

// Independent stream for one restart. Depends only on (seed, restart), so
// restart r behaves the same whatever the total restart count is.
Rng RestartRng(uint64_t seed, uint64_t restart);

// Uniform integer in [0, n), n > 0. Unlike std::uniform_int_distribution
// the result is identical across standard library implementations.
size_t UniformIndex(Rng &rng, size_t n);

}  // namespace drs

#endif  // DRS_RNG_H_
