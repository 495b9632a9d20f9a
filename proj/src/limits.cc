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

#include "mmslab/limits.h"

#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace mmslab {
namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t SaturatingAdd(uint64_t a, uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

uint64_t SaturatingMul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

SearchLimits DefaultSearchLimits() {
  SearchLimits limits;
  if (const char* env = std::getenv("MMSLAB_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) limits.max_states = value;
  }
  return limits;
}

uint64_t SaturatingPow(uint64_t base, int exponent) {
  uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = SaturatingMul(out, base);
  return out;
}

uint64_t CountPartitions(int m, int n) {
  if (m == 0) return 1;
  // stirling[k] = S(j, k) for the current j.
  std::vector<uint64_t> stirling(n + 1, 0);
  stirling[0] = 1;
  for (int j = 1; j <= m; ++j) {
    for (int k = n; k >= 1; --k) {
      stirling[k] = SaturatingAdd(SaturatingMul(k, stirling[k]), stirling[k - 1]);
    }
    stirling[0] = 0;
  }
  uint64_t total = 0;
  for (int k = 1; k <= n; ++k) total = SaturatingAdd(total, stirling[k]);
  return total;
}

}  // namespace mmslab
