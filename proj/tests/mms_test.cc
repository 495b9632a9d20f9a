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

#include "mmslab/mms.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mmslab/builtin.h"
#include "mmslab/errors.h"
#include "oracles.h"
#include "test_util.h"

namespace mmslab {
namespace {

TEST(MmsTest, AdditiveGolden) {
  const Valuation v = Valuation::Additive({4, 3, 2, 2, 1});
  EXPECT_DOUBLE_EQ(ExactMms(v, 2).mu, 6.0);
  EXPECT_DOUBLE_EQ(ExactMms(v, 3).mu, 4.0);
  EXPECT_DOUBLE_EQ(ExactMms(v, 1).mu, 12.0);
}

TEST(MmsTest, FewerGoodsThanAgentsGivesZero) {
  const Valuation v = Valuation::Additive({5, 5});
  const MmsResult r = ExactMms(v, 3);
  EXPECT_EQ(r.mu, 0.0);
  EXPECT_EQ(r.witness.num_agents(), 3);
}

TEST(MmsTest, WitnessIsPartitionAttainingShare) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 6;
    const int n = 1 + trial % 3;
    const Valuation v = testing::RandomTable(gen, m, trial);
    const MmsResult r = ExactMms(v, n);
    ASSERT_EQ(r.witness.num_agents(), n);
    uint64_t seen = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const Bundle& part : r.witness.bundles) {
      EXPECT_EQ(seen & part.mask(), 0u);
      seen |= part.mask();
      worst = std::min(worst, v.Value(part));
    }
    EXPECT_EQ(seen, Bundle::Full(m).mask());
    EXPECT_DOUBLE_EQ(worst, r.mu);
    EXPECT_DOUBLE_EQ(r.mu, oracle::BruteMms(v, n)) << "m=" << m << " n=" << n;
  }
}

TEST(MmsTest, ScaleCovariance) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Valuation v = testing::RandomTable(gen, 5, trial);
    const double mu = ExactMms(v, 2).mu;
    EXPECT_NEAR(ExactMms(Scaled(v, 3.5), 2).mu, 3.5 * mu, 1e-9);
  }
}

TEST(MmsTest, InvariantUnderGoodPermutation) {
  std::mt19937_64 gen(5);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Valuation v = testing::RandomTable(gen, 5, trial);
    std::shuffle(perm.begin(), perm.end(), gen);
    EXPECT_DOUBLE_EQ(ExactMms(PermuteGoods(v, perm), 3).mu, ExactMms(v, 3).mu);
  }
}

TEST(MmsTest, BestMinRatioMatchesBruteForce) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 2 + trial % 2;
    std::vector<Valuation> vals;
    for (int i = 0; i < n; ++i) vals.push_back(testing::RandomTable(gen, m, trial + i));
    const Instance inst = MakeInstance(std::move(vals), m);
    const MmsProfile profile = MmsAll(inst);
    const BestRatio best = BestMinRatio(inst, profile);
    EXPECT_NEAR(best.ratio, oracle::BruteBestRatio(inst, profile.mu), 1e-12);
    const RatioAudit audit = AlphaMmsAudit(inst, best.allocation, profile);
    EXPECT_NEAR(audit.min_ratio, best.ratio, 1e-12);
  }
}

TEST(MmsTest, BuiltinGoldens) {
  const Instance xos = BuiltinXosUpper(0.01);
  const MmsProfile p = MmsAll(xos);
  EXPECT_EQ(p.mu, (std::vector<double>{2.0, 2.0}));
  EXPECT_NEAR(BestMinRatio(xos, p).ratio, 0.505, 1e-12);

  const Instance gap = BuiltinUnboundedLeveled(2, 0.001, 0.0005);
  const MmsProfile q = MmsAll(gap);
  EXPECT_EQ(q.mu, (std::vector<double>{1.0, 1.0}));
  EXPECT_NEAR(BestMinRatio(gap, q).ratio, 0.0015, 1e-12);
}

TEST(MmsTest, ZeroShareRatioIsInfinite) {
  EXPECT_EQ(MmsRatio(0.0, 0.0), std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(MmsRatio(1.0, 2.0), 0.5);
}

TEST(MmsTest, CapsRaiseResourceError) {
  const Valuation v = Valuation::Additive(std::vector<double>(12, 1.0));
  SearchLimits limits;
  limits.max_states = 100;
  EXPECT_THROW(ExactMms(v, 3, limits), ResourceError);
  const Instance inst = MakeInstance({v, v, v}, 12);
  MmsProfile fake{{1, 1, 1}, {Allocation(3), Allocation(3), Allocation(3)}};
  EXPECT_THROW(BestMinRatio(inst, fake, limits), ResourceError);
}

TEST(MmsTest, EnvironmentOverridesStateCap) {
  ::setenv("MMSLAB_MAX_STATES", "7", 1);
  EXPECT_EQ(DefaultSearchLimits().max_states, 7u);
  ::setenv("MMSLAB_MAX_STATES", "junk", 1);
  EXPECT_EQ(DefaultSearchLimits().max_states, SearchLimits{}.max_states);
  ::unsetenv("MMSLAB_MAX_STATES");
}

TEST(MmsTest, PartitionCount) {
  EXPECT_EQ(CountPartitions(4, 2), 8u);   // S(4,1) + S(4,2)
  EXPECT_EQ(CountPartitions(5, 3), 41u);  // 1 + 15 + 25
  EXPECT_EQ(CountPartitions(0, 3), 1u);
  EXPECT_EQ(SaturatingPow(3, 4), 81u);
}

}  // namespace
}  // namespace mmslab
