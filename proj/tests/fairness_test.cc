// Copyright 2026 The MMSLab Authors.
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

#include "mmslab/fairness.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mmslab/errors.h"
#include "oracles.h"
#include "test_util.h"

namespace mmslab {
namespace {

Allocation Alloc(std::initializer_list<std::initializer_list<int>> parts) {
  Allocation a;
  for (const auto& p : parts) a.bundles.push_back(Bundle::FromIndices(p));
  return a;
}

TEST(FairnessTest, HandExamples) {
  const Instance inst = MakeInstance(
      {Valuation::Additive({5, 1, 1}), Valuation::Additive({2, 1, 1})}, 3);
  const Allocation a = Alloc({{}, {0, 1, 2}});
  EXPECT_FALSE(IsEnvyFree(inst, a).holds);
  EXPECT_FALSE(IsEfx(inst, a).holds);
  EXPECT_FALSE(IsEf1(inst, a).holds);
  const Allocation b = Alloc({{0}, {1, 2}});
  EXPECT_TRUE(IsEnvyFree(inst, b).holds);
  EXPECT_TRUE(IsEfx(inst, b).holds);
  EXPECT_TRUE(IsParetoOptimal(inst, b).holds);
  // EF1 but not EFX: agent 1 still envies {0} after good 1 is dropped.
  const Allocation c = Alloc({{0, 1}, {2}});
  EXPECT_TRUE(IsEf1(inst, c).holds);
  EXPECT_FALSE(IsEfx(inst, c).holds);
  const FairnessReport efx = IsEfx(inst, c);
  ASSERT_FALSE(efx.violations.empty());
  EXPECT_EQ(efx.violations[0].i, 1);
  EXPECT_EQ(efx.violations[0].j, 0);
}

TEST(FairnessTest, ParetoFindsDominatingAllocation) {
  const Instance inst = MakeInstance(
      {Valuation::Additive({1, 0}), Valuation::Additive({0, 1})}, 2);
  const FairnessReport r = IsParetoOptimal(inst, Alloc({{1}, {0}}));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.dominating.has_value());
  const Allocation& d = *r.dominating;
  EXPECT_GE(inst.Value(0, d[0]), 0.0);
  EXPECT_GE(inst.Value(1, d[1]), 0.0);
  EXPECT_GT(inst.Value(0, d[0]) + inst.Value(1, d[1]), 0.0);
  EXPECT_TRUE(CheckAllocation(inst, d).ok());
}

TEST(FairnessTest, ParetoRespectsCaps) {
  const Valuation v = Valuation::Additive(std::vector<double>(11, 1.0));
  const Instance inst = MakeInstance({v, v}, 11);
  Allocation a(2);
  a[0] = Bundle::Full(11);
  EXPECT_THROW(IsParetoOptimal(inst, a), ResourceError);
}

TEST(FairnessTest, InvalidAllocationsAreRejected) {
  const Instance inst = MakeInstance(
      {Valuation::Additive({1, 1}), Valuation::Additive({1, 1})}, 2);
  EXPECT_THROW(IsEfx(inst, Alloc({{0}, {0, 1}})), InputError);
  EXPECT_THROW(IsEf1(inst, Alloc({{0}, {}})), InputError);
  EXPECT_THROW(IsEnvyFree(inst, Alloc({{0, 1}})), InputError);
}

// Independent EFX oracle over masks.
bool OracleEfx(const Instance& inst, const std::vector<uint64_t>& parts) {
  for (int i = 0; i < inst.n; ++i) {
    const double own = oracle::V(inst.valuations[i], parts[i]);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      for (uint64_t rest = parts[j]; rest; rest &= rest - 1) {
        const uint64_t g = rest & (~rest + 1);
        if (own < oracle::V(inst.valuations[i], parts[j] & ~g) - inst.tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

TEST(FairnessTest, EfxAgreesWithOracleOnAllAllocations) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + trial % 3;
    const Instance inst = MakeInstance({testing::RandomTable(gen, m, trial),
                                        testing::RandomTable(gen, m, trial + 1)},
                                       m);
    oracle::ForEachAssignment(2, m, [&](const std::vector<int>& owner) {
      const auto parts = oracle::Parts(owner, 2);
      Allocation a(2);
      for (int i = 0; i < 2; ++i) a[i] = Bundle::FromMask(parts[i]);
      EXPECT_EQ(IsEfx(inst, a).holds, OracleEfx(inst, parts));
    });
  }
}

}  // namespace
}  // namespace mmslab
