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

#include <gtest/gtest.h>

#include <functional>

#include "drs/rng.h"
#include "support/properties.h"

namespace drs::testing {
namespace {

constexpr int kTrials = 250;

void RunProperty(const std::function<Failure(Rng &)> &check, uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < kTrials; ++i) {
    const Failure failure = check(rng);
    ASSERT_FALSE(failure.has_value()) << "trial " << i << ": " << *failure;
  }
}

TEST(Property, AlphaInvariance) { RunProperty(CheckAlphaInvariance, 101); }
TEST(Property, Symmetry) { RunProperty(CheckSymmetry, 102); }
TEST(Property, RestartMonotonicity) {
  RunProperty(CheckRestartMonotonicity, 103);
}
TEST(Property, RefRemovalIdempotent) {
  RunProperty(CheckRefRemovalIdempotent, 104);
}
TEST(Property, RoundTrip) { RunProperty(CheckRoundTrip, 105); }
TEST(Property, SelfMatchUnderOracle) {
  RunProperty(CheckSelfMatchUnderOracle, 106);
}

}  // namespace
}  // namespace drs::testing
