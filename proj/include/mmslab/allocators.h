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
// Constructive allocation procedures for leveled (and two-agent submodular)
// instances. Each returns an AllocatorTrace whose final allocation carries
// the procedure's guarantee:
//
//   SdqEfx               EFX for leveled valuations
//   FewItemsAllocate     exact MMS for leveled valuations when m < 2n
//   SubmodularLeveled23  2/3-MMS for submodular leveled valuations
//   TwoSubmodular23      2/3-MMS for two submodular agents
//   SubadditiveHalf      1/2-MMS for subadditive leveled valuations
//
// The MMS procedures verify their own bound before returning and throw
// AllocatorInvariantError (carrying the trace) if it fails.

#ifndef MMSLAB_ALLOCATORS_H_
#define MMSLAB_ALLOCATORS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmslab/bundle.h"
#include "mmslab/errors.h"
#include "mmslab/instance.h"
#include "mmslab/mms.h"
#include "mmslab/valuation.h"

namespace mmslab {

// A picking order: sigma()[p] is the agent who moves p-th.
class PickOrder {
 public:
  static PickOrder Identity(int n);
  // Throws InputError unless `sigma` is a permutation of {0..n-1}.
  explicit PickOrder(std::vector<int> sigma);
  // Parses "2,0,1".
  static PickOrder Parse(const std::string& text, int n);

  int size() const { return static_cast<int>(sigma_.size()); }
  int operator[](int position) const { return sigma_[position]; }
  const std::vector<int>& sigma() const { return sigma_; }

  friend bool operator==(const PickOrder&, const PickOrder&) = default;

 private:
  std::vector<int> sigma_;
};

enum class TraceAction {
  kPick,      // agent chose `bundle` from the available goods
  kAccept,    // agent accepted an offered part
  kReject,    // agent found no remaining part acceptable
  kAssign,    // final assignment of `bundle` to `agent`
  kNote,      // branch or bookkeeping information
};

const char* TraceActionName(TraceAction action);

struct TraceStep {
  TraceAction action = TraceAction::kNote;
  int agent = -1;
  Bundle bundle;
  double value = 0.0;
  std::string detail;
};

struct AllocatorTrace {
  std::string algorithm;
  std::string branch;
  std::vector<TraceStep> steps;
  bool reshuffle_used = false;
  bool fallback_used = false;
  std::vector<std::string> warnings;
  Allocation allocation;
};

// Rebuilds the allocation from the kAssign steps of a trace.
Allocation ReplayTrace(const AllocatorTrace& trace, int n);

class AllocatorInvariantError : public InvariantViolationError {
 public:
  AllocatorInvariantError(const std::string& message, AllocatorTrace trace)
      : InvariantViolationError(message), trace_(std::move(trace)) {}
  const AllocatorTrace& trace() const { return trace_; }

 private:
  AllocatorTrace trace_;
};

// The size-k subset of `available` with the highest value; ties go to the
// canonically smallest bundle. Additive valuations take the top-k fast path.
Bundle FavoriteBundle(const Valuation& v, Bundle available, int k);
// Enumerating path, exposed so the fast path can be checked against it.
Bundle FavoriteBundleByEnumeration(const Valuation& v, Bundle available, int k);

// Serial picks: the p-th agent of `order` takes FavoriteBundle of size
// quotas[p] from what is left. Records kPick and kAssign steps.
Allocation SerialPicks(const Instance& inst, const PickOrder& order,
                       std::span<const int> quotas, AllocatorTrace* trace);

AllocatorTrace SdqEfx(const Instance& inst, const PickOrder& order);

AllocatorTrace FewItemsAllocate(const Instance& inst, const PickOrder& order);

// Agent 0's witness partition anchors the construction.
AllocatorTrace SubmodularLeveled23(const Instance& inst,
                                   const MmsProfile& profile);

AllocatorTrace TwoSubmodular23(const Instance& inst, const MmsProfile& profile);

// `anchor` defaults to the last agent.
AllocatorTrace SubadditiveHalf(const Instance& inst, const MmsProfile& profile,
                               std::optional<int> anchor = std::nullopt);

}  // namespace mmslab

#endif  // MMSLAB_ALLOCATORS_H_
