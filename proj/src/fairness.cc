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

#include <algorithm>
#include <memory>
#include <sstream>

#include "mmslab/errors.h"
#include "mmslab/valuation.h"

namespace mmslab {

std::string FairnessViolation::ToString() const {
  std::ostringstream os;
  os.precision(17);
  os << "agent " << i << " vs agent " << j;
  if (good) os << " without good " << *good;
  os << ": " << lhs << " < " << rhs;
  return os.str();
}

FairnessReport IsEnvyFree(const Instance& inst, const Allocation& alloc) {
  RequireValidAllocation(inst, alloc);
  FairnessReport report{"ef"};
  for (int i = 0; i < inst.n; ++i) {
    const double own = inst.Value(i, alloc[i]);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      const double other = inst.Value(i, alloc[j]);
      if (own < other - inst.tolerance) {
        report.violations.push_back({i, j, std::nullopt, own, other});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

FairnessReport IsEfx(const Instance& inst, const Allocation& alloc) {
  RequireValidAllocation(inst, alloc);
  FairnessReport report{"efx"};
  for (int i = 0; i < inst.n; ++i) {
    const double own = inst.Value(i, alloc[i]);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      for (int g : alloc[j].Indices()) {
        const double other = inst.Value(i, alloc[j].Without(g));
        if (own < other - inst.tolerance) {
          report.violations.push_back({i, j, g, own, other});
        }
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

FairnessReport IsEf1(const Instance& inst, const Allocation& alloc) {
  RequireValidAllocation(inst, alloc);
  FairnessReport report{"ef1"};
  for (int i = 0; i < inst.n; ++i) {
    const double own = inst.Value(i, alloc[i]);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || alloc[j].empty()) continue;
      // The removal that helps i most; first good wins ties.
      int best_good = -1;
      double best_rest = 0.0;
      for (int g : alloc[j].Indices()) {
        const double rest = inst.Value(i, alloc[j].Without(g));
        if (best_good < 0 || rest < best_rest) {
          best_good = g;
          best_rest = rest;
        }
      }
      if (own < best_rest - inst.tolerance) {
        report.violations.push_back({i, j, best_good, own, best_rest});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

FairnessReport IsParetoOptimal(const Instance& inst, const Allocation& alloc,
                               const SearchLimits& limits) {
  RequireValidAllocation(inst, alloc);
  if (inst.m > limits.po_max_goods || inst.n > limits.po_max_agents) {
    throw ResourceError("pareto audit is capped at m <= " +
                        std::to_string(limits.po_max_goods) + " and n <= " +
                        std::to_string(limits.po_max_agents) + " (got m = " +
                        std::to_string(inst.m) + ", n = " +
                        std::to_string(inst.n) + ")");
  }
  FairnessReport report{"po"};
  std::vector<std::unique_ptr<ValueOracle>> oracles;
  std::vector<double> current;
  for (int i = 0; i < inst.n; ++i) {
    oracles.push_back(std::make_unique<ValueOracle>(inst.valuations[i]));
    current.push_back((*oracles[i])(alloc[i]));
  }
  const double tol = inst.tolerance;
  // Odometer over assignment vectors in lexicographic order.
  std::vector<int> owner(inst.m, 0);
  std::vector<uint64_t> masks(inst.n, 0);
  while (true) {
    std::fill(masks.begin(), masks.end(), 0);
    for (int g = 0; g < inst.m; ++g) masks[owner[g]] |= uint64_t{1} << g;
    bool weakly_better = true;
    bool strictly_better = false;
    for (int i = 0; i < inst.n && weakly_better; ++i) {
      const double value = (*oracles[i])(masks[i]);
      if (value < current[i] - tol) weakly_better = false;
      if (value > current[i] + tol) strictly_better = true;
    }
    if (weakly_better && strictly_better) {
      report.holds = false;
      report.dominating = AllocationFromAssignment(owner, inst.n);
      return report;
    }
    int g = inst.m - 1;
    while (g >= 0 && owner[g] == inst.n - 1) owner[g--] = 0;
    if (g < 0) break;
    ++owner[g];
  }
  return report;
}

}  // namespace mmslab
