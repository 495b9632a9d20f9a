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

#include "mmslab/allocators.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mmslab/classify.h"

namespace mmslab {
namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

void RequireProfile(const Instance& inst, const MmsProfile& profile) {
  if (profile.num_agents() != inst.n ||
      static_cast<int>(profile.witnesses.size()) != inst.n) {
    throw InputError("maximin profile does not match the instance");
  }
  for (const Allocation& w : profile.witnesses) {
    if (w.num_agents() != inst.n) {
      throw InputError("maximin witness does not have n parts");
    }
  }
}

void Assign(AllocatorTrace& trace, const Instance& inst, int agent,
            Bundle bundle, std::string detail) {
  trace.allocation[agent] = bundle;
  trace.steps.push_back({TraceAction::kAssign, agent, bundle,
                         inst.Value(agent, bundle), std::move(detail)});
}

void Note(AllocatorTrace& trace, std::string detail) {
  trace.steps.push_back({TraceAction::kNote, -1, Bundle(), 0.0, std::move(detail)});
}

// Index into `parts` of agent's most valuable part; ties go to the
// canonically smallest bundle.
size_t BestPart(const Instance& inst, int agent, const std::vector<Bundle>& parts) {
  size_t best = 0;
  double best_value = inst.Value(agent, parts[0]);
  for (size_t p = 1; p < parts.size(); ++p) {
    const double value = inst.Value(agent, parts[p]);
    if (value > best_value ||
        (value == best_value && CanonicalLess(parts[p], parts[best]))) {
      best = p;
      best_value = value;
    }
  }
  return best;
}

// Checks completeness and the per-agent ratio bound; throws with the trace.
void Verify(const Instance& inst, const MmsProfile& profile, double alpha,
            const AllocatorTrace& trace) {
  AllocationReport report = CheckAllocation(inst, trace.allocation);
  if (!report.ok()) {
    throw AllocatorInvariantError(
        trace.algorithm + " produced an invalid allocation: " + report.ToString(),
        trace);
  }
  for (int i = 0; i < inst.n; ++i) {
    const double value = inst.Value(i, trace.allocation[i]);
    if (value < alpha * profile.mu[i] - inst.tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << trace.algorithm << ": agent " << i << " receives " << value
         << " < " << alpha << " * mu = " << alpha * profile.mu[i];
      throw AllocatorInvariantError(os.str(), trace);
    }
  }
}

AllocatorTrace NewTrace(const Instance& inst, const char* algorithm) {
  inst.Validate();
  AllocatorTrace trace;
  trace.algorithm = algorithm;
  trace.allocation = Allocation(inst.n);
  return trace;
}

// Lets agents other than `anchor`, in index order, take their best
// remaining part of `parts`; the anchor gets the leftover.
void GreedyPartPicks(const Instance& inst, std::vector<Bundle> parts, int anchor,
                     AllocatorTrace& trace) {
  for (int i = 0; i < inst.n; ++i) {
    if (i == anchor) continue;
    const size_t p = BestPart(inst, i, parts);
    trace.steps.push_back({TraceAction::kPick, i, parts[p],
                           inst.Value(i, parts[p]), "best remaining part"});
    Assign(trace, inst, i, parts[p], "greedy pick");
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(p));
  }
  Assign(trace, inst, anchor, parts.front(), "leftover part of own partition");
}

// Returns true when every listed agent meets its 2/3 threshold.
bool MeetsTwoThirds(const Instance& inst, const MmsProfile& profile,
                    std::initializer_list<std::pair<int, Bundle>> offers) {
  for (const auto& [agent, bundle] : offers) {
    if (inst.Value(agent, bundle) < kTwoThirds * profile.mu[agent] - inst.tolerance) {
      return false;
    }
  }
  return true;
}

void ReshuffleLeftovers(const Instance& inst, const MmsProfile& profile,
                        const std::vector<int>& rejecting,
                        const std::vector<Bundle>& leftovers,
                        AllocatorTrace& trace) {
  const size_t k = rejecting.size();
  for (const Bundle& part : leftovers) {
    if (part.size() != 2) {
      throw AllocatorInvariantError(
          "rejected leftover part " + part.ToString() +
              " does not have exactly two goods",
          trace);
    }
  }
  trace.reshuffle_used = true;
  std::vector<int> goods;
  for (const Bundle& part : leftovers) {
    for (int g : part.Indices()) goods.push_back(g);
  }

  if (k >= 2) {
    Note(trace, "cyclic re-pairing of " + std::to_string(2 * k) + " goods");
    Assign(trace, inst, 0, leftovers[k], "last leftover part");
    for (size_t j = 0; j < k; ++j) {
      const Bundle pair = Bundle::FromIndices(
          {goods[2 * j + 1], goods[(2 * j + 2) % (2 * k)]});
      Assign(trace, inst, rejecting[j], pair, "crossing pair");
    }
    return;
  }

  // k == 1: agent 0 and one rejecting agent share four goods. Try the three
  // pairings of the goods, each in both orientations.
  const int r = rejecting[0];
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pairing : pairings) {
    const Bundle first = Bundle::FromIndices({goods[pairing[0]], goods[pairing[1]]});
    const Bundle second = Bundle::FromIndices({goods[pairing[2]], goods[pairing[3]]});
    for (int flip = 0; flip < 2; ++flip) {
      const Bundle mine = flip ? second : first;
      const Bundle theirs = flip ? first : second;
      if (MeetsTwoThirds(inst, profile, {{0, mine}, {r, theirs}})) {
        Note(trace, "four-good re-pairing " + mine.ToString() + " / " +
                        theirs.ToString());
        Assign(trace, inst, 0, mine, "re-paired");
        Assign(trace, inst, r, theirs, "re-paired");
        return;
      }
    }
  }
  throw AllocatorInvariantError(
      "no pairing of the last four goods meets 2/3 of both shares", trace);
}

}  // namespace

PickOrder PickOrder::Identity(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return PickOrder(std::move(sigma));
}

PickOrder::PickOrder(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  std::vector<bool> seen(sigma_.size(), false);
  for (int a : sigma_) {
    if (a < 0 || a >= size() || seen[a]) {
      throw InputError("picking order is not a permutation of the agents");
    }
    seen[a] = true;
  }
}

PickOrder PickOrder::Parse(const std::string& text, int n) {
  if (text.empty()) return Identity(n);
  std::vector<int> sigma;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      sigma.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad picking order entry \"" + item + "\"");
    }
  }
  if (static_cast<int>(sigma.size()) != n) {
    throw InputError("picking order must list all " + std::to_string(n) +
                     " agents");
  }
  return PickOrder(std::move(sigma));
}

const char* TraceActionName(TraceAction action) {
  switch (action) {
    case TraceAction::kPick:
      return "pick";
    case TraceAction::kAccept:
      return "accept";
    case TraceAction::kReject:
      return "reject";
    case TraceAction::kAssign:
      return "assign";
    case TraceAction::kNote:
      return "note";
  }
  return "unknown";
}

Allocation ReplayTrace(const AllocatorTrace& trace, int n) {
  Allocation alloc(n);
  for (const TraceStep& step : trace.steps) {
    if (step.action == TraceAction::kAssign) alloc[step.agent] = step.bundle;
  }
  return alloc;
}

Bundle FavoriteBundleByEnumeration(const Valuation& v, Bundle available, int k) {
  if (k < 0 || k > available.size()) {
    throw InputError("cannot pick " + std::to_string(k) + " goods from " +
                     available.ToString());
  }
  Bundle best;
  double best_value = 0.0;
  bool first = true;
  // Candidates arrive in canonical order, so keeping the first maximum
  // implements the tie-break.
  ForEachSubsetOfSize(available, k, [&](Bundle candidate) {
    const double value = v.Value(candidate);
    if (first || value > best_value) {
      best = candidate;
      best_value = value;
      first = false;
    }
    return true;
  });
  return best;
}

Bundle FavoriteBundle(const Valuation& v, Bundle available, int k) {
  const AdditiveRep* additive = v.additive();
  if (additive == nullptr) return FavoriteBundleByEnumeration(v, available, k);
  if (k < 0 || k > available.size()) {
    throw InputError("cannot pick " + std::to_string(k) + " goods from " +
                     available.ToString());
  }
  if (!available.FitsIn(v.num_goods())) {
    throw InputError("available goods " + available.ToString() +
                     " exceed the valuation");
  }
  std::vector<int> pool = available.Indices();
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
    return additive->values[a] > additive->values[b];
  });
  Bundle out;
  for (int i = 0; i < k; ++i) out = out.With(pool[i]);
  return out;
}

Allocation SerialPicks(const Instance& inst, const PickOrder& order,
                       std::span<const int> quotas, AllocatorTrace* trace) {
  inst.Validate();
  if (order.size() != inst.n || static_cast<int>(quotas.size()) != inst.n) {
    throw InputError("picking order and quotas must have one entry per agent");
  }
  long total = 0;
  for (int q : quotas) {
    if (q < 0) throw InputError("quotas must be non-negative");
    total += q;
  }
  if (total != inst.m) {
    throw InputError("quotas sum to " + std::to_string(total) + ", expected m = " +
                     std::to_string(inst.m));
  }
  Allocation alloc(inst.n);
  Bundle available = Bundle::Full(inst.m);
  for (int p = 0; p < inst.n; ++p) {
    const int agent = order[p];
    const Bundle pick = FavoriteBundle(inst.valuations[agent], available, quotas[p]);
    alloc[agent] = pick;
    available = available - pick;
    if (trace) {
      const double value = inst.Value(agent, pick);
      trace->steps.push_back({TraceAction::kPick, agent, pick, value,
                              "quota " + std::to_string(quotas[p])});
      trace->steps.push_back({TraceAction::kAssign, agent, pick, value, "pick"});
    }
  }
  return alloc;
}

AllocatorTrace SdqEfx(const Instance& inst, const PickOrder& order) {
  AllocatorTrace trace = NewTrace(inst, "sdq-efx");
  const int k = inst.m / inst.n;
  const int r = inst.m % inst.n;
  std::vector<int> quotas(inst.n, k);
  for (int p = inst.n - r; p < inst.n; ++p) quotas[p] = k + 1;
  trace.branch = "m = " + std::to_string(k) + "n + " + std::to_string(r);
  trace.allocation = SerialPicks(inst, order, quotas, &trace);
  if (inst.m <= ClassifyLimits{}.leveled_cap) {
    for (int i = 0; i < inst.n; ++i) {
      ClassReport leveled = IsLeveled(inst.valuations[i], inst.tolerance);
      if (!leveled.holds) {
        trace.warnings.push_back("agent " + std::to_string(i) +
                                 " is not leveled; EFX is not guaranteed");
      }
    }
  }
  return trace;
}

AllocatorTrace FewItemsAllocate(const Instance& inst, const PickOrder& order) {
  AllocatorTrace trace = NewTrace(inst, "few-items");
  const int n = inst.n;
  const int m = inst.m;
  if (m >= 2 * n) {
    throw PreconditionError("few-items allocation needs m < 2n (m = " +
                            std::to_string(m) + ", n = " + std::to_string(n) + ")");
  }
  if (order.size() != n) throw InputError("picking order must cover all agents");
  Bundle available = Bundle::Full(m);
  const int singleton_pickers = m <= n ? m : n - (m - n);
  trace.branch = m <= n ? "m <= n" : "n < m < 2n";
  for (int p = 0; p < singleton_pickers; ++p) {
    const int agent = order[p];
    const Bundle pick = FavoriteBundle(inst.valuations[agent], available, 1);
    available = available - pick;
    trace.steps.push_back({TraceAction::kPick, agent, pick,
                           inst.Value(agent, pick), "favorite singleton"});
    Assign(trace, inst, agent, pick, "singleton");
  }
  if (m > n) {
    const std::vector<int> rest = available.Indices();
    for (int p = singleton_pickers, j = 0; p < n; ++p, j += 2) {
      Assign(trace, inst, order[p], Bundle::FromIndices({rest[j], rest[j + 1]}),
             "ascending pair");
    }
  }
  return trace;
}

AllocatorTrace SubmodularLeveled23(const Instance& inst,
                                   const MmsProfile& profile) {
  inst.Validate();
  RequireProfile(inst, profile);
  const int n = inst.n;
  const int m = inst.m;
  if (m < 2 * n) {
    AllocatorTrace trace = FewItemsAllocate(inst, PickOrder::Identity(n));
    trace.algorithm = "submod-23";
    trace.branch = "few-items";
    Verify(inst, profile, kTwoThirds, trace);
    return trace;
  }

  AllocatorTrace trace = NewTrace(inst, "submod-23");
  const std::vector<Bundle>& anchor_parts = profile.witnesses[0].bundles;
  if (m >= 3 * n) {
    trace.branch = "greedy";
    GreedyPartPicks(inst, anchor_parts, 0, trace);
    Verify(inst, profile, kTwoThirds, trace);
    return trace;
  }

  trace.branch = "offer";
  std::vector<Bundle> remaining = anchor_parts;
  std::vector<int> unserved;
  for (int i = 1; i < n; ++i) unserved.push_back(i);
  bool progress = true;
  while (progress && !unserved.empty()) {
    progress = false;
    for (size_t u = 0; u < unserved.size() && !progress; ++u) {
      const int agent = unserved[u];
      const double threshold = kTwoThirds * profile.mu[agent] - inst.tolerance;
      std::optional<size_t> choice;
      for (size_t p = 0; p < remaining.size(); ++p) {
        if (inst.Value(agent, remaining[p]) < threshold) continue;
        if (!choice || CanonicalLess(remaining[p], remaining[*choice])) choice = p;
      }
      if (!choice) continue;
      const Bundle part = remaining[*choice];
      trace.steps.push_back({TraceAction::kAccept, agent, part,
                             inst.Value(agent, part), "offer accepted"});
      Assign(trace, inst, agent, part, "accepted part");
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*choice));
      unserved.erase(unserved.begin() + static_cast<std::ptrdiff_t>(u));
      progress = true;
    }
  }
  if (unserved.empty()) {
    Assign(trace, inst, 0, remaining.front(), "leftover part of own partition");
  } else {
    for (int agent : unserved) {
      trace.steps.push_back(
          {TraceAction::kReject, agent, Bundle(), 0.0,
           "every remaining part is below 2/3 of the share"});
    }
    trace.branch = "reshuffle";
    ReshuffleLeftovers(inst, profile, unserved, remaining, trace);
  }
  Verify(inst, profile, kTwoThirds, trace);
  return trace;
}

AllocatorTrace TwoSubmodular23(const Instance& inst, const MmsProfile& profile) {
  inst.Validate();
  if (inst.n != 2) {
    throw PreconditionError("two-agent procedure needs n = 2, got n = " +
                            std::to_string(inst.n));
  }
  RequireProfile(inst, profile);
  AllocatorTrace trace = NewTrace(inst, "two-submod-23");
  const Bundle s = profile.witnesses[0][0];
  const Bundle s_bar = profile.witnesses[0][1];
  const Bundle t = profile.witnesses[1][0];
  const Bundle t_bar = profile.witnesses[1][1];

  // An agent accepting a part of the other's partition leaves the other a
  // part of her own partition, worth at least her share.
  auto offer = [&](int agent, Bundle a, Bundle b) -> bool {
    const double va = inst.Value(agent, a);
    const double vb = inst.Value(agent, b);
    const double threshold = kTwoThirds * profile.mu[agent] - inst.tolerance;
    if (std::max(va, vb) < threshold) {
      trace.steps.push_back({TraceAction::kReject, agent, Bundle(), 0.0,
                             "both parts of the other partition are below 2/3"});
      return false;
    }
    const Bundle take = va >= vb ? a : b;
    const Bundle leave = va >= vb ? b : a;
    trace.steps.push_back({TraceAction::kAccept, agent, take,
                           inst.Value(agent, take), "accepted offered part"});
    Assign(trace, inst, agent, take, "accepted part");
    Assign(trace, inst, 1 - agent, leave, "complement from own partition");
    return true;
  };

  if (offer(0, t, t_bar)) {
    trace.branch = "agent0-accepts";
  } else if (offer(1, s, s_bar)) {
    trace.branch = "agent1-accepts";
  } else {
    trace.branch = "fallback";
    trace.fallback_used = true;
    const Bundle a = s & t;
    const Bundle b = s - t;
    const Bundle c = s_bar & t_bar;
    const Bundle d = t - s;
    Assign(trace, inst, 0, a | c, "(S n T) u (S' n T')");
    Assign(trace, inst, 1, b | d, "(S \\ T) u (T \\ S)");
  }
  Verify(inst, profile, kTwoThirds, trace);
  return trace;
}

AllocatorTrace SubadditiveHalf(const Instance& inst, const MmsProfile& profile,
                               std::optional<int> anchor) {
  inst.Validate();
  RequireProfile(inst, profile);
  const int a = anchor.value_or(inst.n - 1);
  if (a < 0 || a >= inst.n) {
    throw InputError("anchor agent " + std::to_string(a) + " out of range");
  }
  AllocatorTrace trace = NewTrace(inst, "subadd-half");
  trace.branch = "anchor " + std::to_string(a);
  GreedyPartPicks(inst, profile.witnesses[a].bundles, a, trace);
  Verify(inst, profile, 0.5, trace);
  return trace;
}

}  // namespace mmslab
