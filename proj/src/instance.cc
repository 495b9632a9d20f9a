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

#include "mmslab/instance.h"

#include <sstream>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

constexpr std::pair<ValuationClass, const char*> kClassNames[] = {
    {ValuationClass::kAdditive, "additive"},
    {ValuationClass::kSubmodular, "submodular"},
    {ValuationClass::kXos, "xos"},
    {ValuationClass::kSubadditive, "subadditive"},
    {ValuationClass::kGeneral, "general"},
};

}  // namespace

std::string DeclaredClass::ToString() const {
  if (cls == ValuationClass::kGeneral) return leveled ? "leveled" : "general";
  for (const auto& [c, name] : kClassNames) {
    if (c == cls) return leveled ? std::string(name) + "-leveled" : name;
  }
  return "general";
}

DeclaredClass DeclaredClass::Parse(const std::string& text) {
  if (text == "leveled") return {ValuationClass::kGeneral, true};
  std::string base = text;
  bool leveled = false;
  const std::string suffix = "-leveled";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base.resize(base.size() - suffix.size());
    leveled = true;
  }
  for (const auto& [c, name] : kClassNames) {
    if (base == name) return {c, leveled};
  }
  throw InputError("unknown valuation class tag \"" + text + "\"");
}

void Instance::Validate() const {
  if (n < 1) throw InputError("instance needs at least one agent");
  if (m < 0 || m > kMaxGoods) {
    throw InputError("good count " + std::to_string(m) + " out of range");
  }
  if (static_cast<int>(valuations.size()) != n) {
    throw InputError("instance has " + std::to_string(valuations.size()) +
                     " valuations for " + std::to_string(n) + " agents");
  }
  for (int i = 0; i < n; ++i) {
    if (valuations[i].num_goods() != m) {
      throw InputError("valuation of agent " + std::to_string(i) + " covers " +
                       std::to_string(valuations[i].num_goods()) +
                       " goods, expected " + std::to_string(m));
    }
  }
  if (!declared_classes.empty() &&
      static_cast<int>(declared_classes.size()) != n) {
    throw InputError("declared_classes must be empty or have one entry per agent");
  }
  if (!(tolerance >= 0.0)) throw InputError("tolerance must be non-negative");
}

Instance MakeInstance(std::vector<Valuation> valuations, int m) {
  Instance inst;
  inst.n = static_cast<int>(valuations.size());
  inst.m = m;
  inst.valuations = std::move(valuations);
  inst.provenance.source = "user";
  inst.Validate();
  return inst;
}

Instance PermuteGoods(const Instance& inst, std::span<const int> perm) {
  Instance out = inst;
  for (auto& v : out.valuations) v = PermuteGoods(v, perm);
  return out;
}

Bundle PermuteGoods(Bundle bundle, std::span<const int> perm) {
  Bundle out;
  for (int g : bundle.Indices()) out = out.With(perm[g]);
  return out;
}

Allocation PermuteGoods(const Allocation& alloc, std::span<const int> perm) {
  Allocation out = alloc;
  for (auto& b : out.bundles) b = PermuteGoods(b, perm);
  return out;
}

std::string AllocationIssue::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kAgentCount:
      os << "allocation has " << first_agent << " bundles for " << second_agent
         << " agents";
      break;
    case Kind::kOutOfRange:
      os << "agent " << first_agent << " holds good " << good
         << " outside the instance";
      break;
    case Kind::kOverlap:
      os << "good " << good << " assigned to agents " << first_agent << " and "
         << second_agent;
      break;
    case Kind::kUnassigned:
      os << "good " << good << " unassigned";
      break;
  }
  return os.str();
}

std::string AllocationReport::ToString() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.ToString();
  }
  return out;
}

AllocationReport CheckAllocation(const Instance& inst, const Allocation& alloc) {
  AllocationReport report;
  if (alloc.num_agents() != inst.n) {
    report.issues.push_back({AllocationIssue::Kind::kAgentCount, -1,
                             alloc.num_agents(), inst.n});
  }
  std::vector<int> owner(kMaxGoods, -1);
  for (int i = 0; i < alloc.num_agents(); ++i) {
    for (int g : alloc[i].Indices()) {
      if (g >= inst.m) {
        report.issues.push_back({AllocationIssue::Kind::kOutOfRange, g, i, -1});
        continue;
      }
      if (owner[g] >= 0) {
        report.issues.push_back(
            {AllocationIssue::Kind::kOverlap, g, owner[g], i});
      } else {
        owner[g] = i;
      }
    }
  }
  for (int g = 0; g < inst.m; ++g) {
    if (owner[g] < 0) {
      report.issues.push_back({AllocationIssue::Kind::kUnassigned, g, -1, -1});
    }
  }
  return report;
}

void RequireValidAllocation(const Instance& inst, const Allocation& alloc) {
  AllocationReport report = CheckAllocation(inst, alloc);
  if (!report.ok()) throw InputError("invalid allocation: " + report.ToString());
}

}  // namespace mmslab
