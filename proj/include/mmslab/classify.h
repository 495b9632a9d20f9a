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
// Exhaustive class membership checks for valuations over small ground sets.
//
// Every check enumerates bundles in ascending mask order and reports the
// first violation it meets, so witnesses are deterministic.

#ifndef MMSLAB_CLASSIFY_H_
#define MMSLAB_CLASSIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "mmslab/bundle.h"
#include "mmslab/instance.h"
#include "mmslab/valuation.h"

namespace mmslab {

struct ClassifyLimits {
  int leveled_cap = 16;     // also used for monotone/normalized/additive
  int submodular_cap = 14;  // also used for subadditive
};

// A counterexample. The meaning of lhs/rhs depends on the class:
//   normalized   first = {}, lhs = v({}), rhs = 0, need lhs == 0
//   monotone     first = S, second = S + g, need v(second) >= v(first) - tol
//                (lhs = v(second), rhs = v(first))
//   leveled      first = larger bundle, second = smaller bundle,
//                need v(first) > v(second) + tol (lhs = v(first), rhs = v(second))
//   additive     first = S, lhs = v(S), rhs = sum of singleton values,
//                need |lhs - rhs| <= tol
//   submodular   first = S subset of second = T, good g not in T,
//                lhs = v(S+g) - v(S), rhs = v(T+g) - v(T), need lhs >= rhs - tol
//   subadditive  first = S, second = T, lhs = v(S) + v(T), rhs = v(S u T),
//                need lhs >= rhs - tol
struct ClassWitness {
  Bundle first;
  Bundle second;
  std::optional<int> good;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;

  std::string ToString() const;
};

struct ClassReport {
  std::string class_name;
  // False when the check cannot decide membership for this representation
  // (XOS membership of a table); `holds` is then false and `note` explains.
  bool decided = true;
  bool holds = true;
  std::optional<ClassWitness> witness;
  std::string note;
};

ClassReport IsNormalized(const Valuation& v);
ClassReport IsMonotone(const Valuation& v, double tol = kDefaultTolerance,
                       const ClassifyLimits& limits = {});
ClassReport IsLeveled(const Valuation& v, double tol = kDefaultTolerance,
                      const ClassifyLimits& limits = {});
ClassReport IsAdditive(const Valuation& v, double tol = kDefaultTolerance,
                       const ClassifyLimits& limits = {});
// Diminishing marginals over all S subset T, g not in T.
ClassReport IsSubmodular(const Valuation& v, double tol = kDefaultTolerance,
                         const ClassifyLimits& limits = {});
// Decided only for constructive representations (additive, xos).
ClassReport IsXos(const Valuation& v);
ClassReport IsSubadditive(const Valuation& v, double tol = kDefaultTolerance,
                          const ClassifyLimits& limits = {});

struct AgentClassification {
  int agent = 0;
  std::vector<ClassReport> reports;
  // Declared class claims contradicted by a check, with the witness text.
  std::vector<std::string> mismatches;

  const ClassReport* Find(const std::string& class_name) const;
};

// Runs every check on every agent and cross-checks declared classes.
// Resource errors from individual checks propagate.
std::vector<AgentClassification> ClassifyAll(const Instance& inst,
                                             const ClassifyLimits& limits = {});

}  // namespace mmslab

#endif  // MMSLAB_CLASSIFY_H_
