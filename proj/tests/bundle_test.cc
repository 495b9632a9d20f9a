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

#include "mmslab/bundle.h"

#include <vector>

#include <gtest/gtest.h>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

TEST(BundleTest, FromIndicesBuildsMask) {
  const Bundle b = Bundle::FromIndices({0, 2, 3});
  EXPECT_EQ(b.mask(), 0b1101u);
  EXPECT_EQ(b.size(), 3);
  EXPECT_TRUE(b.Contains(2));
  EXPECT_FALSE(b.Contains(1));
  EXPECT_EQ(b.Indices(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(b.ToString(), "{0,2,3}");
  EXPECT_EQ(Bundle().ToString(), "{}");
}

TEST(BundleTest, FromIndicesRejectsDuplicatesAndRange) {
  EXPECT_THROW(Bundle::FromIndices({1, 1}), InputError);
  EXPECT_THROW(Bundle::FromIndices({-1}), InputError);
  EXPECT_THROW(Bundle::FromIndices({64}), InputError);
}

TEST(BundleTest, SetOperations) {
  const Bundle a = Bundle::FromIndices({0, 1});
  const Bundle b = Bundle::FromIndices({1, 2});
  EXPECT_EQ(a | b, Bundle::FromIndices({0, 1, 2}));
  EXPECT_EQ(a & b, Bundle::FromIndices({1}));
  EXPECT_EQ(a - b, Bundle::FromIndices({0}));
  EXPECT_TRUE(Bundle::FromIndices({1}).IsSubsetOf(a));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_EQ(Bundle::Full(3), Bundle::FromIndices({0, 1, 2}));
  EXPECT_TRUE(a.FitsIn(2));
  EXPECT_FALSE(b.FitsIn(2));
  EXPECT_EQ(a.With(5).Without(0), Bundle::FromIndices({1, 5}));
}

TEST(BundleTest, CanonicalOrderIsLexicographicOnSortedIndices) {
  EXPECT_TRUE(CanonicalLess(Bundle::FromIndices({0, 3}), Bundle::FromIndices({1, 2})));
  EXPECT_TRUE(CanonicalLess(Bundle::FromIndices({0}), Bundle::FromIndices({0, 1})));
  EXPECT_TRUE(CanonicalLess(Bundle(), Bundle::FromIndices({0})));
  EXPECT_FALSE(CanonicalLess(Bundle::FromIndices({1}), Bundle::FromIndices({0, 5})));
  EXPECT_FALSE(CanonicalLess(Bundle::FromIndices({2}), Bundle::FromIndices({2})));
}

TEST(BundleTest, SubsetsOfSizeComeInCanonicalOrder) {
  const Bundle within = Bundle::FromIndices({1, 3, 4, 6, 7});
  for (int k = 0; k <= 5; ++k) {
    std::vector<Bundle> seen;
    ForEachSubsetOfSize(within, k, [&](Bundle b) {
      seen.push_back(b);
      return true;
    });
    const size_t expected[] = {1, 5, 10, 10, 5, 1};
    ASSERT_EQ(seen.size(), expected[k]);
    for (size_t i = 0; i < seen.size(); ++i) {
      EXPECT_EQ(seen[i].size(), k);
      EXPECT_TRUE(seen[i].IsSubsetOf(within));
      if (i > 0) EXPECT_TRUE(CanonicalLess(seen[i - 1], seen[i]));
    }
  }
}

TEST(BundleTest, SubsetEnumerationStopsEarly) {
  int calls = 0;
  ForEachSubsetOfSize(Bundle::Full(6), 3, [&](Bundle) { return ++calls < 4; });
  EXPECT_EQ(calls, 4);
}

TEST(BundleTest, AllocationFromAssignment) {
  const std::vector<int> owner = {1, 0, 1, 2};
  const Allocation a = AllocationFromAssignment(owner, 3);
  EXPECT_EQ(a.num_agents(), 3);
  EXPECT_EQ(a[0], Bundle::FromIndices({1}));
  EXPECT_EQ(a[1], Bundle::FromIndices({0, 2}));
  EXPECT_EQ(a[2], Bundle::FromIndices({3}));
  EXPECT_EQ(a.ToString(), "({1}, {0,2}, {3})");
}

}  // namespace
}  // namespace mmslab
