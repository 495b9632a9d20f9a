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

//
// Exact maximin shares.
//
// The maximin share of an agent is the best worst-part value over all
// partitions of the goods into n (possibly empty) parts. ExactMms finds it by
// depth-first search over restricted-growth assignment vectors (each good
// joins an already opened part or opens the next one), which enumerates
// every partition exactly once up to relabelling of parts. A node is pruned
// when the optimistic completion bound, min over parts of v(part plus all
// unassigned goods), cannot beat the incumbent; this is sound for monotone
// valuations.

#ifndef MMSLAB_MMS_H_
#define MMSLAB_MMS_H_

#include <vector>

#include "mmslab/bundle.h"
#include "mmslab/instance.h"
#include "mmslab/limits.h"
#include "mmslab/valuation.h"

namespace mmslab {

struct MmsResult {
  double mu = 0.0;
  // Parts in restricted-growth order; unused parts are empty and come last.
  Allocation witness;
};

// Among maximizing partitions, returns the one whose restricted-growth
// assignment vector is lexicographically smallest.
MmsResult ExactMms(const Valuation& v, int n,
                   const SearchLimits& limits = DefaultSearchLimits());

struct MmsProfile {
  std::vector<double> mu;
  std::vector<Allocation> witnesses;

  int num_agents() const { return static_cast<int>(mu.size()); }
};

MmsProfile MmsAll(const Instance& inst,
                  const SearchLimits& limits = DefaultSearchLimits());

// value / mu, or +infinity when mu == 0.
double MmsRatio(double value, double mu);

struct RatioAudit {
  std::vector<double> values;
  std::vector<double> ratios;
  double min_ratio = 0.0;
  int argmin_agent = 0;
};

RatioAudit AlphaMmsAudit(const Instance& inst, const Allocation& alloc,
                         const MmsProfile& profile);

struct BestRatio {
  double ratio = 0.0;
  Allocation allocation;
};

// Exact max over all complete allocations of min_i v_i(A_i) / mu_i. Ties go
// to the lexicographically smallest assignment vector.
BestRatio BestMinRatio(const Instance& inst, const MmsProfile& profile,
                       const SearchLimits& limits = DefaultSearchLimits());

}  // namespace mmslab

#endif  // MMSLAB_MMS_H_
