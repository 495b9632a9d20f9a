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

#ifndef MMSLAB_INSTANCE_H_
#define MMSLAB_INSTANCE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmslab/bundle.h"
#include "mmslab/valuation.h"

namespace mmslab {

// Valuation classes in increasing generality. kGeneral means "no
// complement-freeness claimed".
enum class ValuationClass { kAdditive, kSubmodular, kXos, kSubadditive, kGeneral };

struct DeclaredClass {
  ValuationClass cls = ValuationClass::kGeneral;
  bool leveled = false;

  // "additive", "submodular-leveled", "general", "leveled" (= general-leveled).
  std::string ToString() const;
  static DeclaredClass Parse(const std::string& text);  // throws InputError

  friend bool operator==(const DeclaredClass&, const DeclaredClass&) = default;
};

// Where an instance came from: the generator configuration or a builtin name.
struct Provenance {
  std::string source;         // "generator:<class>", "builtin:<name>", "user"
  std::string rng_algorithm;  // empty when no randomness was used
  std::optional<uint64_t> seed;
  std::map<std::string, double> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Instance {
  int n = 0;
  int m = 0;
  std::vector<Valuation> valuations;
  // Empty, or one entry per agent.
  std::vector<DeclaredClass> declared_classes;
  double tolerance = kDefaultTolerance;
  Provenance provenance;

  // Throws InputError when the shape invariants do not hold.
  void Validate() const;

  double Value(int agent, Bundle bundle) const {
    return valuations[agent].Value(bundle);
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Convenience constructor; validates.
Instance MakeInstance(std::vector<Valuation> valuations, int m);

// Relabels goods of every valuation (good g becomes perm[g]).
Instance PermuteGoods(const Instance& inst, std::span<const int> perm);
Allocation PermuteGoods(const Allocation& alloc, std::span<const int> perm);
Bundle PermuteGoods(Bundle bundle, std::span<const int> perm);

// Validity diagnostics for an allocation against an instance.
struct AllocationIssue {
  enum class Kind { kAgentCount, kOutOfRange, kOverlap, kUnassigned };
  Kind kind;
  int good = -1;
  int first_agent = -1;
  int second_agent = -1;

  std::string ToString() const;
};

struct AllocationReport {
  std::vector<AllocationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string ToString() const;
};

AllocationReport CheckAllocation(const Instance& inst, const Allocation& alloc);

// Throws InputError carrying the report when the allocation is invalid.
void RequireValidAllocation(const Instance& inst, const Allocation& alloc);

}  // namespace mmslab

#endif  // MMSLAB_INSTANCE_H_
