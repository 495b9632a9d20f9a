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

#ifndef MMSLAB_FAIRNESS_H_
#define MMSLAB_FAIRNESS_H_

#include <optional>
#include <string>
#include <vector>

#include "mmslab/bundle.h"
#include "mmslab/instance.h"
#include "mmslab/limits.h"

namespace mmslab {

// Agent i's comparison against agent j's bundle. For EFX/EF1, `good` is the
// removed good; lhs = v_i(A_i), rhs = v_i(A_j) or v_i(A_j - g).
struct FairnessViolation {
  int i = 0;
  int j = 0;
  std::optional<int> good;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string ToString() const;
};

struct FairnessReport {
  std::string property;
  bool holds = true;
  std::vector<FairnessViolation> violations;
  // Pareto optimality only: the first dominating allocation found.
  std::optional<Allocation> dominating;
};

// All audits throw InputError on an invalid allocation and compare with the
// instance tolerance.
FairnessReport IsEnvyFree(const Instance& inst, const Allocation& alloc);
FairnessReport IsEfx(const Instance& inst, const Allocation& alloc);
FairnessReport IsEf1(const Instance& inst, const Allocation& alloc);
// Exhaustive dominance check over all n^m allocations.
FairnessReport IsParetoOptimal(const Instance& inst, const Allocation& alloc,
                               const SearchLimits& limits = DefaultSearchLimits());

}  // namespace mmslab

#endif  // MMSLAB_FAIRNESS_H_
