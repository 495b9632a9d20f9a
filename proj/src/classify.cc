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

#include "mmslab/classify.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

void RequireUnderCap(const Valuation& v, int cap, const char* check) {
  if (v.num_goods() > cap) {
    throw ResourceError(std::string(check) + " check over " +
                        std::to_string(v.num_goods()) +
                        " goods exceeds the cap of " + std::to_string(cap));
  }
}

ClassReport Holds(const char* name) {
  ClassReport r;
  r.class_name = name;
  return r;
}

ClassReport Violated(const char* name, ClassWitness w) {
  ClassReport r;
  r.class_name = name;
  r.holds = false;
  r.witness = std::move(w);
  return r;
}

ClassWitness MakeWitness(uint64_t first, uint64_t second, std::optional<int> good,
                         double lhs, double rhs, const char* relation) {
  return ClassWitness{Bundle::FromMask(first), Bundle::FromMask(second), good,
                      lhs, rhs, relation};
}

}  // namespace

std::string ClassWitness::ToString() const {
  std::ostringstream os;
  os.precision(17);
  os << relation << " fails: first=" << first.ToString()
     << " second=" << second.ToString();
  if (good) os << " good=" << *good;
  os << " lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

ClassReport IsNormalized(const Valuation& v) {
  const double empty = v.Value(Bundle());
  if (empty != 0.0) {
    return Violated("normalized",
                    MakeWitness(0, 0, std::nullopt, empty, 0.0, "v({}) == 0"));
  }
  return Holds("normalized");
}

ClassReport IsMonotone(const Valuation& v, double tol,
                       const ClassifyLimits& limits) {
  RequireUnderCap(v, limits.leveled_cap, "monotone");
  const int m = v.num_goods();
  const std::vector<double> t = Tabulate(v);
  for (uint64_t s = 0; s < t.size(); ++s) {
    for (int g = 0; g < m; ++g) {
      const uint64_t bit = uint64_t{1} << g;
      if (s & bit) continue;
      if (t[s] > t[s | bit] + tol) {
        return Violated("monotone", MakeWitness(s, s | bit, g, t[s | bit], t[s],
                                                "v(S + g) >= v(S)"));
      }
    }
  }
  return Holds("monotone");
}

ClassReport IsLeveled(const Valuation& v, double tol,
                      const ClassifyLimits& limits) {
  RequireUnderCap(v, limits.leveled_cap, "leveled");
  const int m = v.num_goods();
  const std::vector<double> t = Tabulate(v);
  std::vector<uint64_t> argmin(m + 1, 0), argmax(m + 1, 0);
  std::vector<bool> seen(m + 1, false);
  for (uint64_t s = 0; s < t.size(); ++s) {
    const int k = std::popcount(s);
    if (!seen[k]) {
      seen[k] = true;
      argmin[k] = argmax[k] = s;
      continue;
    }
    if (t[s] < t[argmin[k]]) argmin[k] = s;
    if (t[s] > t[argmax[k]]) argmax[k] = s;
  }
  for (int k = 0; k < m; ++k) {
    const double larger = t[argmin[k + 1]];
    const double smaller = t[argmax[k]];
    if (!(larger > smaller + tol)) {
      return Violated("leveled",
                      MakeWitness(argmin[k + 1], argmax[k], std::nullopt, larger,
                                  smaller, "v(larger) > v(smaller)"));
    }
  }
  return Holds("leveled");
}

ClassReport IsAdditive(const Valuation& v, double tol,
                       const ClassifyLimits& limits) {
  RequireUnderCap(v, limits.leveled_cap, "additive");
  const std::vector<double> t = Tabulate(v);
  for (uint64_t s = 0; s < t.size(); ++s) {
    double sum = 0.0;
    for (uint64_t rest = s; rest != 0; rest &= rest - 1) {
      sum += t[rest & (~rest + 1)];
    }
    if (std::abs(t[s] - sum) > tol) {
      return Violated("additive", MakeWitness(s, 0, std::nullopt, t[s], sum,
                                              "v(S) == sum of singletons"));
    }
  }
  return Holds("additive");
}

ClassReport IsSubmodular(const Valuation& v, double tol,
                         const ClassifyLimits& limits) {
  RequireUnderCap(v, limits.submodular_cap, "submodular");
  const int m = v.num_goods();
  const std::vector<double> t = Tabulate(v);
  const uint64_t full = t.size() - 1;
  for (uint64_t s = 0; s <= full; ++s) {
    // Supersets of s in ascending order.
    for (uint64_t u = s;; u = ((u + 1) | s)) {
      if (u > full) break;
      for (int g = 0; g < m; ++g) {
        const uint64_t bit = uint64_t{1} << g;
        if (u & bit) continue;
        const double small_gain = t[s | bit] - t[s];
        const double large_gain = t[u | bit] - t[u];
        if (small_gain < large_gain - tol) {
          return Violated("submodular",
                          MakeWitness(s, u, g, small_gain, large_gain,
                                      "v(S + g) - v(S) >= v(T + g) - v(T)"));
        }
      }
      if (u == full) break;
    }
  }
  return Holds("submodular");
}

ClassReport IsXos(const Valuation& v) {
  switch (v.kind()) {
    case ValuationKind::kAdditive:
    case ValuationKind::kXos:
      return Holds("xos");
    default: {
      ClassReport r = Holds("xos");
      r.decided = false;
      r.holds = false;
      r.note = std::string("xos membership is not decided for ") +
               ValuationKindName(v.kind()) + " valuations";
      return r;
    }
  }
}

ClassReport IsSubadditive(const Valuation& v, double tol,
                          const ClassifyLimits& limits) {
  RequireUnderCap(v, limits.submodular_cap, "subadditive");
  const std::vector<double> t = Tabulate(v);
  const uint64_t full = t.size() - 1;
  // Under exact monotonicity, overlapping pairs reduce to disjoint ones:
  // v(S) + v(T) >= v(S) + v(T \ S) >= v(S u T).
  const bool monotone = IsMonotone(v, 0.0, limits).holds;
  if (monotone) {
    for (uint64_t u = 0; u <= full; ++u) {
      for (uint64_t s = u;; s = (s - 1) & u) {
        const uint64_t rest = u & ~s;
        if (t[s] + t[rest] < t[u] - tol) {
          return Violated("subadditive",
                          MakeWitness(s, rest, std::nullopt, t[s] + t[rest],
                                      t[u], "v(S) + v(T) >= v(S u T)"));
        }
        if (s == 0) break;
      }
    }
    return Holds("subadditive");
  }
  for (uint64_t s = 0; s <= full; ++s) {
    for (uint64_t r = 0; r <= full; ++r) {
      if (t[s] + t[r] < t[s | r] - tol) {
        return Violated("subadditive",
                        MakeWitness(s, r, std::nullopt, t[s] + t[r], t[s | r],
                                    "v(S) + v(T) >= v(S u T)"));
      }
    }
  }
  return Holds("subadditive");
}

const ClassReport* AgentClassification::Find(
    const std::string& class_name) const {
  for (const auto& r : reports) {
    if (r.class_name == class_name) return &r;
  }
  return nullptr;
}

std::vector<AgentClassification> ClassifyAll(const Instance& inst,
                                             const ClassifyLimits& limits) {
  inst.Validate();
  const double tol = inst.tolerance;
  auto skipped = [&](const char* name, int cap) {
    ClassReport r;
    r.class_name = name;
    r.decided = false;
    r.holds = false;
    r.note = "skipped: " + std::to_string(inst.m) + " goods exceeds the cap of " +
             std::to_string(cap);
    return r;
  };
  std::vector<AgentClassification> out;
  for (int i = 0; i < inst.n; ++i) {
    const Valuation& v = inst.valuations[i];
    AgentClassification ac;
    ac.agent = i;
    const bool small = inst.m <= limits.leveled_cap;
    const bool tiny = inst.m <= limits.submodular_cap;
    ac.reports.push_back(IsNormalized(v));
    ac.reports.push_back(small ? IsMonotone(v, tol, limits)
                               : skipped("monotone", limits.leveled_cap));
    ac.reports.push_back(small ? IsLeveled(v, tol, limits)
                               : skipped("leveled", limits.leveled_cap));
    ac.reports.push_back(small ? IsAdditive(v, tol, limits)
                               : skipped("additive", limits.leveled_cap));
    ac.reports.push_back(tiny ? IsSubmodular(v, tol, limits)
                              : skipped("submodular", limits.submodular_cap));
    ac.reports.push_back(IsXos(v));
    ac.reports.push_back(tiny ? IsSubadditive(v, tol, limits)
                              : skipped("subadditive", limits.submodular_cap));

    if (!inst.declared_classes.empty()) {
      const DeclaredClass& declared = inst.declared_classes[i];
      std::vector<const char*> implied;
      switch (declared.cls) {
        case ValuationClass::kAdditive:
          implied = {"additive", "submodular", "xos", "subadditive"};
          break;
        case ValuationClass::kSubmodular:
          implied = {"submodular", "xos", "subadditive"};
          break;
        case ValuationClass::kXos:
          implied = {"xos", "subadditive"};
          break;
        case ValuationClass::kSubadditive:
          implied = {"subadditive"};
          break;
        case ValuationClass::kGeneral:
          break;
      }
      if (declared.leveled) implied.push_back("leveled");
      for (const char* name : implied) {
        const ClassReport* r = ac.Find(name);
        if (r && r->decided && !r->holds) {
          ac.mismatches.push_back("declared " + declared.ToString() + " but " +
                                  name + " fails: " + r->witness->ToString());
        }
      }
    }
    out.push_back(std::move(ac));
  }
  return out;
}

}  // namespace mmslab
