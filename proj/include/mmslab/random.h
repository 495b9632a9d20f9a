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
// Portable pseudo-random source for instance generation.
//
// The engine is the standard 64-bit Mersenne Twister (std::mt19937_64,
// whose output sequence is fixed by the C++ standard). Conversions to
// doubles and bounded integers are defined here rather than taken from
// <random> distributions, whose algorithms vary between standard libraries:
//
//   Uniform01()    (x >> 11) * 2^-53, in [0, 1)
//   UniformOpen()  ((x >> 11) + 0.5) * 2^-53, in (0, 1)
//   Below(k)       rejection sampling on x against the largest multiple of k
//
// The algorithm identifier below is recorded in every generated instance.

#ifndef MMSLAB_RANDOM_H_
#define MMSLAB_RANDOM_H_

#include <cstdint>
#include <random>

namespace mmslab {

inline constexpr const char* kRngAlgorithm = "mt19937_64+u53";

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  double UniformOpen() {
    return (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Uniform integer in [0, k); k > 0.
  uint64_t Below(uint64_t k) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % k;
  }
  // Uniform integer in [lo, hi].
  int Between(int lo, int hi) {
    return lo + static_cast<int>(Below(static_cast<uint64_t>(hi - lo) + 1));
  }
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mmslab

#endif  // MMSLAB_RANDOM_H_
