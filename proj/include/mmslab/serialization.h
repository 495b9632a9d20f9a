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
// JSON instance and allocation files.
//
// Instance file:
//   {"version": 1, "n": 2, "m": 4, "tolerance": 1e-9,
//    "rng": {"algorithm": "mt19937_64+u53", "seed": 42},   (optional)
//    "provenance": {"source": "...", "params": {...}},     (optional)
//    "declared_classes": ["submodular-leveled", ...],      (optional)
//    "valuations": [
//      {"kind": "additive", "values": [...]},
//      {"kind": "table", "values": {"": 0, "0": 1.5, "0,1": 2.0, ...}},
//      {"kind": "xos", "clauses": [[...], ...]},
//      {"kind": "size_anchored", "base": [...], "deltas": [...], "scale": 0.1}]}
//
// Allocation file:
//   {"bundles": [[0, 2], [1, 3]], "tolerance": 1e-9}
//
// Numbers are written in shortest round-trip form, so saving and loading
// reproduces every double bit for bit.

#ifndef MMSLAB_SERIALIZATION_H_
#define MMSLAB_SERIALIZATION_H_

#include <string>

#include "mmslab/bundle.h"
#include "mmslab/instance.h"

namespace mmslab {

inline constexpr int kInstanceFormatVersion = 1;

// Errors are InputError with a field path ("valuations[1].values") and, for
// syntax errors, the line and column.
std::string InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const std::string& text);
void SaveInstance(const Instance& inst, const std::string& path);
Instance LoadInstance(const std::string& path);

// "0,2,3" for {0,2,3}; "" for the empty bundle.
std::string TableKey(Bundle b);

struct AllocationFile {
  Allocation allocation;
  double tolerance = kDefaultTolerance;
};

std::string AllocationToJson(const Allocation& alloc,
                             double tolerance = kDefaultTolerance);
// Rejects bundles that share a good.
AllocationFile AllocationFromJson(const std::string& text);
void SaveAllocation(const Allocation& alloc, const std::string& path,
                    double tolerance = kDefaultTolerance);
AllocationFile LoadAllocation(const std::string& path);

// FNV-1a 64-bit hash of the canonical JSON text, as 16 hex digits.
std::string InstanceDigest(const Instance& inst);

}  // namespace mmslab

#endif  // MMSLAB_SERIALIZATION_H_
