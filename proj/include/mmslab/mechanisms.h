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
// Serial dictatorship with quotas (SDQ) and falsification audits for
// mechanism properties. The audits run a mechanism on finite families of
// misreports or relabellings and report every counterexample they find;
// passing an audit is evidence, not proof.

#ifndef MMSLAB_MECHANISMS_H_
#define MMSLAB_MECHANISMS_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmslab/allocators.h"
#include "mmslab/bundle.h"
#include "mmslab/fairness.h"
#include "mmslab/instance.h"

namespace mmslab {

// quotas[p] is the number of goods the p-th picker of `order` takes.
struct Sdq {
  PickOrder order;
  std::vector<int> quotas;
};

// First n - r entries floor(m/n), last r entries floor(m/n) + 1, r = m mod n.
std::vector<int> BalancedQuotas(int n, int m);
// "3,1" -> {3, 1}.
std::vector<int> ParseQuotas(const std::string& text);

// Throws InputError when the quotas do not sum to m.
Allocation RunSdq(const Instance& inst, const Sdq& mech);

using Mechanism = std::function<Allocation(const Instance&)>;

Mechanism SdqMechanism(Sdq mech);
// Agents take turns in `order`, each taking the single remaining good with
// the highest reported value. Not truthful; used as a reference
// counterexample for the audits.
Mechanism RoundRobinMechanism(PickOrder order);

// strategies[i] lists the alternative reports of agent i.
using StrategySet = std::vector<std::vector<Valuation>>;

StrategySet TruthfulStrategies(const Instance& inst);
// Every permutation of each agent's additive value vector, identity first.
// Requires additive valuations and m <= max_goods.
StrategySet PermutationStrategies(const Instance& inst, int max_goods = 7);

// All permutations of {0..m-1} in lexicographic order (m <= 8).
std::vector<std::vector<int>> AllPermutations(int m);

struct AuditViolation {
  int agent = -1;
  int strategy = -1;
  int partner = -1;           // group audits only
  int partner_strategy = -1;  // group audits only
  std::vector<int> permutation;  // neutrality only
  double truthful_value = 0.0;
  double deviating_value = 0.0;
  Allocation truthful;
  Allocation deviated;

  std::string ToString() const;
};

struct AuditOutcome {
  std::string property;
  bool holds = true;
  bool skipped = false;
  std::string note;
  long cases_checked = 0;
  std::vector<AuditViolation> violations;
};

AuditOutcome TruthfulnessAudit(const Instance& inst, const Mechanism& mech,
                               const StrategySet& strategies);
AuditOutcome NonBossinessAudit(const Instance& inst, const Mechanism& mech,
                               const StrategySet& strategies);
// n = 2 only: no joint misreport makes both agents strictly better off.
AuditOutcome GroupStrategyproofnessAudit(const Instance& inst,
                                         const Mechanism& mech,
                                         const StrategySet& strategies);

// True iff, for every agent and every listed size, all bundles of that size
// have pairwise values more than tol apart.
bool HasStrictPreferences(const Instance& inst, std::span<const int> sizes);

// Skipped (holds, with skipped = true) unless preferences are strict at
// `sizes`.
AuditOutcome NeutralityAudit(const Instance& inst, const Mechanism& mech,
                             const std::vector<std::vector<int>>& permutations,
                             std::span<const int> sizes);
AuditOutcome NeutralityAudit(const Instance& inst, const Sdq& mech,
                             const std::vector<std::vector<int>>& permutations);

// True iff every leveled input yields an EFX outcome under these quotas.
bool QuotasGuaranteeEfx(std::span<const int> quotas);

struct CharacterizationReport {
  bool quotas_guarantee_efx = false;
  bool input_leveled = false;
  FairnessReport efx_on_input;
  // Present when the quotas do not guarantee EFX: a leveled instance on
  // which the mechanism's outcome violates EFX.
  std::optional<Instance> witness;
  std::optional<FairnessReport> efx_on_witness;
  // Guarantee and observations agree.
  bool consistent = false;
};

CharacterizationReport CharacterizationCheck(const Instance& inst,
                                             const Sdq& mech);

}  // namespace mmslab

#endif  // MMSLAB_MECHANISMS_H_
