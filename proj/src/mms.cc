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
#include <limits>
#include <memory>
#include <string>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Pruning bounds a part by its value with all unassigned goods added, which
// is only sound for monotone valuations.
bool IsMonotoneRep(const Valuation& v) {
  if (const TableRep* t = v.table()) {
    for (uint64_t s = 0; s < t->values.size(); ++s) {
      for (uint64_t rest = ~s & (t->values.size() - 1); rest; rest &= rest - 1) {
        if (t->values[s] > t->values[s | (rest & (~rest + 1))]) return false;
      }
    }
    return true;
  }
  if (const SizeAnchoredRep* a = v.size_anchored()) {
    for (double d : a->deltas) {
      if (d < 0) return false;
    }
    return std::is_sorted(a->base.begin(), a->base.end());
  }
  return true;
}

class PartitionSearch {
 public:
  PartitionSearch(const ValueOracle& value, int n, int m, bool prune)
      : value_(value), n_(n), m_(m), prune_(prune), parts_(n, 0), owner_(m, 0) {}

  void Run() { Visit(0, m_ == 0 ? 0 : Bundle::Full(m_).mask()); }

  double best() const { return best_; }
  const std::vector<int>& best_owner() const { return best_owner_; }

 private:
  void Visit(int g, uint64_t unassigned) {
    if (g == m_) {
      double worst = kInf;
      for (int p = 0; p < n_; ++p) worst = std::min(worst, value_(parts_[p]));
      if (worst > best_) {
        best_ = worst;
        best_owner_ = owner_;
      }
      return;
    }
    if (prune_) {
      double bound = kInf;
      for (int p = 0; p < opened_; ++p) {
        bound = std::min(bound, value_(parts_[p] | unassigned));
      }
      if (opened_ < n_) bound = std::min(bound, value_(unassigned));
      if (bound <= best_) return;
    }

    const uint64_t bit = uint64_t{1} << g;
    const int last = std::min(opened_, n_ - 1);
    for (int p = 0; p <= last; ++p) {
      const bool opens = p == opened_;
      parts_[p] |= bit;
      owner_[g] = p;
      if (opens) ++opened_;
      Visit(g + 1, unassigned & ~bit);
      if (opens) --opened_;
      parts_[p] &= ~bit;
    }
  }

  const ValueOracle& value_;
  const int n_;
  const int m_;
  const bool prune_;
  std::vector<uint64_t> parts_;
  int opened_ = 0;
  std::vector<int> owner_;
  double best_ = -kInf;
  std::vector<int> best_owner_;
};

class RatioSearch {
 public:
  RatioSearch(std::vector<std::unique_ptr<ValueOracle>> values,
              std::vector<double> mu, int m, bool prune)
      : values_(std::move(values)),
        mu_(std::move(mu)),
        n_(static_cast<int>(mu_.size())),
        m_(m),
        prune_(prune),
        masks_(n_, 0),
        owner_(m, 0) {}

  void Run() { Visit(0, m_ == 0 ? 0 : Bundle::Full(m_).mask()); }

  double best() const { return best_; }
  const std::vector<int>& best_owner() const { return best_owner_; }

 private:
  double Ratio(int agent, uint64_t mask) const {
    return MmsRatio((*values_[agent])(mask), mu_[agent]);
  }

  void Visit(int g, uint64_t unassigned) {
    if (g == m_) {
      double worst = kInf;
      for (int i = 0; i < n_; ++i) worst = std::min(worst, Ratio(i, masks_[i]));
      if (worst > best_) {
        best_ = worst;
        best_owner_ = owner_;
      }
      return;
    }
    if (prune_) {
      double bound = kInf;
      for (int i = 0; i < n_; ++i) {
        bound = std::min(bound, Ratio(i, masks_[i] | unassigned));
      }
      if (bound <= best_) return;
    }
    const uint64_t bit = uint64_t{1} << g;
    for (int i = 0; i < n_; ++i) {
      masks_[i] |= bit;
      owner_[g] = i;
      Visit(g + 1, unassigned & ~bit);
      masks_[i] &= ~bit;
    }
  }

  std::vector<std::unique_ptr<ValueOracle>> values_;
  std::vector<double> mu_;
  const int n_;
  const int m_;
  const bool prune_;
  std::vector<uint64_t> masks_;
  std::vector<int> owner_;
  double best_ = -kInf;
  std::vector<int> best_owner_;
};

}  // namespace

MmsResult ExactMms(const Valuation& v, int n, const SearchLimits& limits) {
  if (n < 1) throw InputError("maximin share needs n >= 1");
  const int m = v.num_goods();
  const uint64_t states = CountPartitions(m, n);
  if (states > limits.max_states) {
    throw ResourceError("maximin search over " + std::to_string(m) +
                        " goods and " + std::to_string(n) +
                        " parts visits up to " + std::to_string(states) +
                        " partitions, over the cap of " +
                        std::to_string(limits.max_states) +
                        "; use fewer goods or agents, or raise MMSLAB_MAX_STATES");
  }
  ValueOracle oracle(v);
  PartitionSearch search(oracle, n, m, IsMonotoneRep(v));
  search.Run();
  return MmsResult{search.best(), AllocationFromAssignment(search.best_owner(), n)};
}

MmsProfile MmsAll(const Instance& inst, const SearchLimits& limits) {
  inst.Validate();
  MmsProfile profile;
  for (const Valuation& v : inst.valuations) {
    MmsResult r = ExactMms(v, inst.n, limits);
    profile.mu.push_back(r.mu);
    profile.witnesses.push_back(std::move(r.witness));
  }
  return profile;
}

double MmsRatio(double value, double mu) {
  return mu == 0.0 ? kInf : value / mu;
}

RatioAudit AlphaMmsAudit(const Instance& inst, const Allocation& alloc,
                         const MmsProfile& profile) {
  RequireValidAllocation(inst, alloc);
  if (profile.num_agents() != inst.n) {
    throw InputError("maximin profile has " +
                     std::to_string(profile.num_agents()) + " agents, expected " +
                     std::to_string(inst.n));
  }
  RatioAudit audit;
  audit.min_ratio = kInf;
  for (int i = 0; i < inst.n; ++i) {
    const double value = inst.Value(i, alloc[i]);
    const double ratio = MmsRatio(value, profile.mu[i]);
    audit.values.push_back(value);
    audit.ratios.push_back(ratio);
    if (ratio < audit.min_ratio) {
      audit.min_ratio = ratio;
      audit.argmin_agent = i;
    }
  }
  return audit;
}

BestRatio BestMinRatio(const Instance& inst, const MmsProfile& profile,
                       const SearchLimits& limits) {
  inst.Validate();
  if (profile.num_agents() != inst.n) {
    throw InputError("maximin profile does not match the instance");
  }
  const uint64_t states = SaturatingPow(inst.n, inst.m);
  if (states > limits.max_states) {
    throw ResourceError("allocation search visits up to " +
                        std::to_string(states) + " allocations, over the cap of " +
                        std::to_string(limits.max_states) +
                        "; use fewer goods or agents, or raise MMSLAB_MAX_STATES");
  }
  std::vector<std::unique_ptr<ValueOracle>> oracles;
  for (const Valuation& v : inst.valuations) {
    oracles.push_back(std::make_unique<ValueOracle>(v));
  }
  const bool prune = std::all_of(inst.valuations.begin(), inst.valuations.end(),
                                 IsMonotoneRep);
  RatioSearch search(std::move(oracles), profile.mu, inst.m, prune);
  search.Run();
  return BestRatio{search.best(),
                   AllocationFromAssignment(search.best_owner(), inst.n)};
}

}  // namespace mmslab
