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

#include "mmslab/valuation.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

std::vector<Valuation> Samples() {
  return {
      Valuation::Additive({1.5, 0.25, 3.0, 0.125}),
      Valuation::Table({0, 1, 2, 2.5, 1, 1.75, 2.25, 3}),
      Valuation::Xos({{1, 1, 0.5}, {0.25, 2, 0}}),
      Valuation::SizeAnchored({0, 1, 1.8, 2.4}, {0.1, 0.7, 0.3}, 0.2),
  };
}

TEST(ValuationTest, AdditiveSumsMembers) {
  const Valuation v = Valuation::Additive({1.5, 0.25, 3.0});
  EXPECT_EQ(v.kind(), ValuationKind::kAdditive);
  EXPECT_EQ(v.num_goods(), 3);
  EXPECT_DOUBLE_EQ(v.Value(Bundle()), 0.0);
  EXPECT_DOUBLE_EQ(v.Value(Bundle::FromIndices({0, 2})), 4.5);
}

TEST(ValuationTest, XosTakesBestClause) {
  const Valuation v = Valuation::Xos({{1, 1, 0.01, 0.01}, {0.01, 0.01, 1, 1}});
  EXPECT_DOUBLE_EQ(v.Value(Bundle::FromIndices({0, 1})), 2.0);
  EXPECT_DOUBLE_EQ(v.Value(Bundle::FromIndices({0, 2})), 1.01);
  EXPECT_DOUBLE_EQ(v.Value(Bundle::Full(4)), 2.02);
}

TEST(ValuationTest, SizeAnchoredAddsScaledDeltas) {
  const Valuation v = Valuation::SizeAnchored({0, 1, 1.5}, {0.5, 0.25}, 0.1);
  EXPECT_DOUBLE_EQ(v.Value(Bundle::FromIndices({0})), 1.05);
  EXPECT_DOUBLE_EQ(v.Value(Bundle::FromIndices({0, 1})), 1.5 + 0.1 * 0.75);
}

TEST(ValuationTest, FactoriesRejectMalformedInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Valuation::Additive({1, -1}), InputError);
  EXPECT_THROW(Valuation::Additive({1, nan}), InputError);
  EXPECT_THROW(Valuation::Table({0, 1, 2}), InputError);     // not 2^m entries
  EXPECT_THROW(Valuation::Table({0.5, 1}), InputError);      // v(empty) != 0
  EXPECT_THROW(Valuation::Xos({}), InputError);
  EXPECT_THROW(Valuation::Xos({{1, 2}, {1}}), InputError);   // ragged clauses
  EXPECT_THROW(Valuation::SizeAnchored({0, 1}, {0.1, 0.2}, 0.5), InputError);
  EXPECT_THROW(Valuation::SizeAnchored({0.1, 1}, {0.1}, 0.5), InputError);
  EXPECT_THROW(Valuation::SizeAnchored({0, 1}, {0.1}, -1), InputError);
}

TEST(ValuationTest, OversizedTableIsAResourceError) {
  std::vector<double> table(size_t{1} << 17, 1.0);
  table[0] = 0.0;
  EXPECT_THROW(Valuation::Table(table), ResourceError);
}

TEST(ValuationTest, OutOfRangeQueryIsAnInputError) {
  const Valuation v = Valuation::Additive({1, 2});
  EXPECT_THROW(v.Value(Bundle::FromIndices({2})), InputError);
}

TEST(ValuationTest, TabulateMatchesValueBitForBit) {
  for (const Valuation& v : Samples()) {
    const std::vector<double> t = Tabulate(v);
    ASSERT_EQ(t.size(), size_t{1} << v.num_goods());
    const ValueOracle oracle(v);
    for (uint64_t mask = 0; mask < t.size(); ++mask) {
      EXPECT_EQ(t[mask], v.Value(Bundle::FromMask(mask))) << ValuationKindName(v.kind());
      EXPECT_EQ(oracle(mask), t[mask]);
    }
  }
}

TEST(ValuationTest, TabulationIsExactForRandomAdditiveValues) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> values(12);
  for (double& x : values) x = dist(gen);
  const Valuation v = Valuation::Additive(values);
  const std::vector<double> t = Tabulate(v);
  for (uint64_t mask = 0; mask < t.size(); ++mask) {
    ASSERT_EQ(t[mask], v.ValueUnchecked(mask));
  }
}

TEST(ValuationTest, PermuteGoodsRelabels) {
  const std::vector<int> perm = {2, 0, 3, 1};  // good g becomes perm[g]
  for (const Valuation& v : Samples()) {
    if (v.num_goods() != 4) continue;
    const Valuation p = PermuteGoods(v, perm);
    for (uint64_t mask = 0; mask < 16; ++mask) {
      uint64_t image = 0;
      for (int g = 0; g < 4; ++g) {
        if ((mask >> g) & 1u) image |= uint64_t{1} << perm[g];
      }
      EXPECT_DOUBLE_EQ(p.Value(Bundle::FromMask(image)), v.Value(Bundle::FromMask(mask)));
    }
  }
}

TEST(ValuationTest, PermuteGoodsRejectsNonPermutations) {
  const Valuation v = Valuation::Additive({1, 2, 3});
  EXPECT_THROW(PermuteGoods(v, std::vector<int>{0, 0, 1}), InputError);
  EXPECT_THROW(PermuteGoods(v, std::vector<int>{0, 1}), InputError);
}

TEST(ValuationTest, ScaledMultipliesEveryValue) {
  for (const Valuation& v : Samples()) {
    const Valuation s = Scaled(v, 2.5);
    EXPECT_EQ(s.kind(), v.kind());
    for (uint64_t mask = 0; mask < (uint64_t{1} << v.num_goods()); ++mask) {
      EXPECT_NEAR(s.ValueUnchecked(mask), 2.5 * v.ValueUnchecked(mask), 1e-12);
    }
  }
  EXPECT_THROW(Scaled(Samples()[0], 0.0), InputError);
}

}  // namespace
}  // namespace mmslab
