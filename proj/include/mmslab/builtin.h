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
// Hand-built instances with known maximin shares.

#ifndef MMSLAB_BUILTIN_H_
#define MMSLAB_BUILTIN_H_

#include <optional>
#include <string>
#include <vector>

#include "mmslab/instance.h"

namespace mmslab {

// n agents, m = 2n goods, leveled Table valuations. Singletons are worth
// eps and bundles with more than two goods |S| + eps. Agents 0..n-2 value
// the pairs {0,1}, {2,3}, ... at 1; agent n-1 values {0,2n-1}, {1,2},
// {3,4}, ... at 1. Every other pair is worth eps + delta. Every share is 1,
// while every allocation leaves some agent with at most eps + delta.
// Requires n >= 2, eps > 0, delta > 0, eps + delta < 1.
Instance BuiltinUnboundedLeveled(int n, double eps = 0.001, double delta = 0.0005);

// Four goods, XOS agents. Type 1 has clauses [1,1,e,e] and [e,e,1,1];
// type 2 has [1,e,e,1] and [e,1,1,e]. The instance holds
// 1 + extra_type1_copies agents of type 1 followed by one agent of type 2.
// Requires 0 < eps < 1.
Instance BuiltinXosUpper(double eps = 0.01, int extra_type1_copies = 0);

// Names accepted by BuiltinByName.
std::vector<std::string> BuiltinNames();

// "unbounded-leveled" reads n, eps, delta; "xos-upper" reads eps, copies.
// Missing parameters take the defaults above (n = 2).
Instance BuiltinByName(const std::string& name, int n, std::optional<double> eps,
                       std::optional<double> delta, int copies);

}  // namespace mmslab

#endif  // MMSLAB_BUILTIN_H_
