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
// Exhaustive checkers for the bundle-value statements behind the 2/3 and
// 1/2 share arguments. Each counts the bundle pairs enumerated, the pairs
// meeting the premise, and records the first counterexample found.

#ifndef MMSLAB_TESTS_STATEMENTS_H_
#define MMSLAB_TESTS_STATEMENTS_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmslab/valuation.h"

namespace mmslab::statements {

struct Outcome {
  long enumerated = 0;
  long cases = 0;
  std::optional<std::string> counterexample;
};

inline std::vector<uint64_t> MasksOfSize(int m, int k) {
  std::vector<uint64_t> out;
  for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
    if (std::popcount(s) == k) out.push_back(s);
  }
  return out;
}

inline std::string Describe(uint64_t s, uint64_t t, double vs, double vt) {
  return Bundle::FromMask(s).ToString() + "=" + std::to_string(vs) + " " +
         Bundle::FromMask(t).ToString() + "=" + std::to_string(vt);
}

// For every four goods split into pairs S, T with both below 2/3 mu, each
// pair meeting both S and T is above 2/3 mu.
inline Outcome CrossingPairs(const Valuation& v, double mu, double tol) {
  Outcome out;
  const int m = v.num_goods();
  const double bar = 2.0 / 3.0 * mu;
  auto val = [&](uint64_t s) { return v.Value(Bundle::FromMask(s)); };
  for (uint64_t s : MasksOfSize(m, 2)) {
    for (uint64_t t : MasksOfSize(m, 2)) {
      if ((s & t) || s > t) continue;
      ++out.enumerated;
      if (std::max(val(s), val(t)) >= bar) continue;
      ++out.cases;
      for (uint64_t a = s; a; a &= a - 1) {
        for (uint64_t c = t; c; c &= c - 1) {
          const uint64_t u = (a & -a) | (c & -c);
          if (!(val(u) > bar - tol) && !out.counterexample) {
            out.counterexample = Describe(s, t, val(s), val(t)) + " crossing " +
                                 Bundle::FromMask(u).ToString() + "=" +
                                 std::to_string(val(u));
          }
        }
      }
    }
  }
  return out;
}

// For disjoint S, T of size floor(m/n): v(S) < frac * mu implies
// v(T) > frac * mu.
inline Outcome EqualSizePairs(const Valuation& v, int n, double mu, double frac,
                              double tol) {
  Outcome out;
  const int m = v.num_goods();
  const int k = m / n;
  if (k == 0) return out;
  const double bar = frac * mu;
  auto val = [&](uint64_t s) { return v.Value(Bundle::FromMask(s)); };
  const std::vector<uint64_t> sets = MasksOfSize(m, k);
  for (uint64_t s : sets) {
    for (uint64_t t : sets) {
      if (s & t) continue;
      ++out.enumerated;
      if (!(val(s) < bar)) continue;
      ++out.cases;
      if (!(val(t) > bar - tol) && !out.counterexample) {
        out.counterexample = Describe(s, t, val(s), val(t));
      }
    }
  }
  return out;
}

}  // namespace mmslab::statements

#endif  // MMSLAB_TESTS_STATEMENTS_H_
