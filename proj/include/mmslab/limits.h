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

#ifndef MMSLAB_LIMITS_H_
#define MMSLAB_LIMITS_H_

#include <cstdint>

namespace mmslab {

// Caps for the exhaustive searches. Exceeding one raises ResourceError.
struct SearchLimits {
  // Leaf count of an MMS partition search or an allocation enumeration.
  uint64_t max_states = 50'000'000;
  // Pareto-optimality audits enumerate all n^m allocations.
  int po_max_goods = 10;
  int po_max_agents = 3;
};

// Defaults, with MMSLAB_MAX_STATES overriding max_states when set to a
// positive integer.
SearchLimits DefaultSearchLimits();

// n^m saturating at UINT64_MAX.
uint64_t SaturatingPow(uint64_t base, int exponent);

// Number of partitions of m labelled goods into at most n unlabelled,
// possibly empty, parts (sum of Stirling numbers of the second kind),
// saturating at UINT64_MAX.
uint64_t CountPartitions(int m, int n);

}  // namespace mmslab

#endif  // MMSLAB_LIMITS_H_
