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

#include "mmslab/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "mmslab/classify.h"
#include "mmslab/errors.h"

namespace mmslab {
namespace {

Instance WithReport(const Instance& inst, int agent, const Valuation& report) {
  Instance out = inst;
  out.valuations[agent] = report;
  return out;
}

void CheckStrategies(const Instance& inst, const StrategySet& strategies) {
  if (static_cast<int>(strategies.size()) != inst.n) {
    throw InputError("strategy set must list reports for every agent");
  }
  for (const auto& list : strategies) {
    for (const Valuation& v : list) {
      if (v.num_goods() != inst.m) {
        throw InputError("misreport has the wrong number of goods");
      }
    }
  }
}

std::string FormatPermutation(const std::vector<int>& perm) {
  std::string out;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(perm[i]);
  }
  return out;
}

}  // namespace

std::vector<int> BalancedQuotas(int n, int m) {
  if (n <= 0 || m < 0) throw InputError("balanced quotas need n > 0, m >= 0");
  const int k = m / n;
  const int r = m % n;
  std::vector<int> quotas(n, k);
  for (int p = n - r; p < n; ++p) quotas[p] = k + 1;
  return quotas;
}

std::vector<int> ParseQuotas(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("quota '" + token + "' is not an integer");
    }
    if (used != token.size() || q < 0) {
      throw InputError("quota '" + token + "' is not a non-negative integer");
    }
    out.push_back(q);
  }
  if (out.empty()) throw InputError("empty quota list");
  return out;
}

Allocation RunSdq(const Instance& inst, const Sdq& mech) {
  return SerialPicks(inst, mech.order, mech.quotas, nullptr);
}

Mechanism SdqMechanism(Sdq mech) {
  return [mech = std::move(mech)](const Instance& inst) {
    return RunSdq(inst, mech);
  };
}

Mechanism RoundRobinMechanism(PickOrder order) {
  return [order = std::move(order)](const Instance& inst) {
    if (order.size() != inst.n) {
      throw InputError("picking order must cover all agents");
    }
    Allocation alloc(inst.n);
    Bundle available = Bundle::Full(inst.m);
    for (int turn = 0; !available.empty(); ++turn) {
      const int agent = order[turn % inst.n];
      const Bundle pick = FavoriteBundle(inst.valuations[agent], available, 1);
      alloc[agent] = alloc[agent] | pick;
      available = available - pick;
    }
    return alloc;
  };
}

StrategySet TruthfulStrategies(const Instance& inst) {
  StrategySet out(inst.n);
  for (int i = 0; i < inst.n; ++i) out[i] = {inst.valuations[i]};
  return out;
}

std::vector<std::vector<int>> AllPermutations(int m) {
  if (m < 0) throw InputError("negative permutation size");
  if (m > 8) {
    throw ResourceError("refusing to enumerate " + std::to_string(m) +
                        "! permutations (cap m <= 8)");
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

StrategySet PermutationStrategies(const Instance& inst, int max_goods) {
  if (inst.m > max_goods) {
    throw ResourceError("permutation strategies need m <= " +
                        std::to_string(max_goods));
  }
  const auto perms = AllPermutations(inst.m);
  StrategySet out(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    const AdditiveRep* rep = inst.valuations[i].additive();
    if (rep == nullptr) {
      throw PreconditionError("permutation strategies need additive valuations");
    }
    out[i].reserve(perms.size());
    for (const auto& perm : perms) {
      std::vector<double> values(inst.m);
      for (int g = 0; g < inst.m; ++g) values[g] = rep->values[perm[g]];
      out[i].push_back(Valuation::Additive(std::move(values)));
    }
  }
  return out;
}

std::string AuditViolation::ToString() const {
  std::ostringstream os;
  if (!permutation.empty()) {
    os << "relabelling [" << FormatPermutation(permutation) << "]: expected "
       << truthful.ToString() << ", got " << deviated.ToString();
    return os.str();
  }
  os << "agent " << agent << " report #" << strategy;
  if (partner >= 0) os << " with agent " << partner << " report #" << partner_strategy;
  os << ": truthful value " << truthful_value << ", after deviation "
     << deviating_value << " (" << truthful.ToString() << " -> "
     << deviated.ToString() << ")";
  return os.str();
}

AuditOutcome TruthfulnessAudit(const Instance& inst, const Mechanism& mech,
                               const StrategySet& strategies) {
  CheckStrategies(inst, strategies);
  AuditOutcome out{.property = "truthful"};
  const Allocation truthful = mech(inst);
  for (int i = 0; i < inst.n; ++i) {
    const double base = inst.Value(i, truthful[i]);
    for (size_t s = 0; s < strategies[i].size(); ++s) {
      const Allocation dev = mech(WithReport(inst, i, strategies[i][s]));
      ++out.cases_checked;
      const double gain = inst.Value(i, dev[i]);
      if (gain > base + inst.tolerance) {
        out.holds = false;
        out.violations.push_back({.agent = i,
                                  .strategy = static_cast<int>(s),
                                  .truthful_value = base,
                                  .deviating_value = gain,
                                  .truthful = truthful,
                                  .deviated = dev});
      }
    }
  }
  return out;
}

AuditOutcome NonBossinessAudit(const Instance& inst, const Mechanism& mech,
                               const StrategySet& strategies) {
  CheckStrategies(inst, strategies);
  AuditOutcome out{.property = "non-bossy"};
  const Allocation truthful = mech(inst);
  for (int i = 0; i < inst.n; ++i) {
    for (size_t s = 0; s < strategies[i].size(); ++s) {
      const Allocation dev = mech(WithReport(inst, i, strategies[i][s]));
      ++out.cases_checked;
      // A bossy deviation keeps the deviator's own bundle and moves someone
      // else's.
      if (dev[i] == truthful[i] && !(dev == truthful)) {
        out.holds = false;
        const double v = inst.Value(i, truthful[i]);
        out.violations.push_back({.agent = i,
                                  .strategy = static_cast<int>(s),
                                  .truthful_value = v,
                                  .deviating_value = v,
                                  .truthful = truthful,
                                  .deviated = dev});
      }
    }
  }
  return out;
}

AuditOutcome GroupStrategyproofnessAudit(const Instance& inst,
                                         const Mechanism& mech,
                                         const StrategySet& strategies) {
  if (inst.n != 2) {
    throw PreconditionError("group strategyproofness audit supports n = 2 only");
  }
  CheckStrategies(inst, strategies);
  AuditOutcome out{.property = "group-strategyproof"};
  const Allocation truthful = mech(inst);
  const double base0 = inst.Value(0, truthful[0]);
  const double base1 = inst.Value(1, truthful[1]);
  for (size_t s0 = 0; s0 < strategies[0].size(); ++s0) {
    Instance joint = WithReport(inst, 0, strategies[0][s0]);
    for (size_t s1 = 0; s1 < strategies[1].size(); ++s1) {
      joint.valuations[1] = strategies[1][s1];
      const Allocation dev = mech(joint);
      ++out.cases_checked;
      const double v0 = inst.Value(0, dev[0]);
      const double v1 = inst.Value(1, dev[1]);
      if (v0 > base0 + inst.tolerance && v1 > base1 + inst.tolerance) {
        out.holds = false;
        out.violations.push_back({.agent = 0,
                                  .strategy = static_cast<int>(s0),
                                  .partner = 1,
                                  .partner_strategy = static_cast<int>(s1),
                                  .truthful_value = base0,
                                  .deviating_value = v0,
                                  .truthful = truthful,
                                  .deviated = dev});
      }
    }
  }
  return out;
}

bool HasStrictPreferences(const Instance& inst, std::span<const int> sizes) {
  for (int i = 0; i < inst.n; ++i) {
    const ValueOracle value(inst.valuations[i]);
    for (int s : sizes) {
      if (s <= 0 || s > inst.m) continue;
      std::vector<double> values;
      ForEachSubsetOfSize(Bundle::Full(inst.m), s, [&](Bundle b) {
        values.push_back(value(b));
        return true;
      });
      std::sort(values.begin(), values.end());
      for (size_t k = 1; k < values.size(); ++k) {
        if (values[k] - values[k - 1] <= inst.tolerance) return false;
      }
    }
  }
  return true;
}

AuditOutcome NeutralityAudit(const Instance& inst, const Mechanism& mech,
                             const std::vector<std::vector<int>>& permutations,
                             std::span<const int> sizes) {
  AuditOutcome out{.property = "neutral"};
  if (!HasStrictPreferences(inst, sizes)) {
    out.skipped = true;
    out.note = "tie-degenerate: bundle values tie at a picked size";
    return out;
  }
  const Allocation base = mech(inst);
  for (const auto& perm : permutations) {
    if (static_cast<int>(perm.size()) != inst.m) {
      throw InputError("relabelling has the wrong length");
    }
    const Allocation expected = PermuteGoods(base, perm);
    const Allocation got = mech(PermuteGoods(inst, perm));
    ++out.cases_checked;
    if (!(got == expected)) {
      out.holds = false;
      out.violations.push_back({.permutation = perm,
                                .truthful = expected,
                                .deviated = got});
    }
  }
  return out;
}

AuditOutcome NeutralityAudit(const Instance& inst, const Sdq& mech,
                             const std::vector<std::vector<int>>& permutations) {
  std::vector<int> sizes = mech.quotas;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return NeutralityAudit(inst, SdqMechanism(mech), permutations, sizes);
}

bool QuotasGuaranteeEfx(std::span<const int> quotas) {
  for (size_t p = 0; p < quotas.size(); ++p) {
    for (size_t l = p + 1; l < quotas.size(); ++l) {
      const int early = quotas[p];
      const int late = quotas[l];
      // Later picker against the earlier bundle minus one good.
      if (early > late && early > 1) return false;
      // Earlier picker against the later bundle minus one good.
      if (late > early + 1) return false;
    }
  }
  return true;
}

CharacterizationReport CharacterizationCheck(const Instance& inst,
                                             const Sdq& mech) {
  inst.Validate();
  CharacterizationReport report;
  report.quotas_guarantee_efx = QuotasGuaranteeEfx(mech.quotas);
  report.efx_on_input = IsEfx(inst, RunSdq(inst, mech));
  report.input_leveled = inst.m <= ClassifyLimits{}.leveled_cap;
  for (int i = 0; i < inst.n && report.input_leveled; ++i) {
    report.input_leveled = IsLeveled(inst.valuations[i], inst.tolerance).holds;
  }
  if (report.quotas_guarantee_efx) {
    report.consistent = !report.input_leveled || report.efx_on_input.holds;
    return report;
  }
  // Identical, distinct, nearly equal additive values: leveled, and every
  // picker takes the best goods left.
  const int m = inst.m;
  const double step = 1.0 / ((m + 1.0) * (m + 1.0));
  std::vector<double> values(m);
  for (int g = 0; g < m; ++g) values[g] = 1.0 + (g + 1) * step;
  Instance witness = MakeInstance(
      std::vector<Valuation>(inst.n, Valuation::Additive(values)), m);
  witness.declared_classes.assign(
      inst.n, DeclaredClass{ValuationClass::kAdditive, true});
  witness.provenance.source = "witness:sdq-quotas";
  report.efx_on_witness = IsEfx(witness, RunSdq(witness, mech));
  report.witness = std::move(witness);
  report.consistent = !report.efx_on_witness->holds;
  return report;
}

}  // namespace mmslab
