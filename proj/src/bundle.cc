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

#include "mmslab/bundle.h"

#include <sstream>

#include "mmslab/errors.h"

namespace mmslab {

Bundle Bundle::FromIndices(std::span<const int> indices) {
  uint64_t mask = 0;
  for (int g : indices) {
    if (g < 0 || g >= kMaxGoods) {
      throw InputError("good index " + std::to_string(g) + " out of range");
    }
    const uint64_t bit = uint64_t{1} << g;
    if (mask & bit) {
      throw InputError("duplicate good index " + std::to_string(g));
    }
    mask |= bit;
  }
  return Bundle(mask);
}

Bundle Bundle::FromIndices(std::initializer_list<int> indices) {
  return FromIndices(std::span<const int>(indices.begin(), indices.size()));
}

Bundle Bundle::Full(int m) {
  if (m < 0 || m > kMaxGoods) {
    throw InputError("good count " + std::to_string(m) + " out of range");
  }
  return Bundle(m == kMaxGoods ? ~uint64_t{0} : (uint64_t{1} << m) - 1);
}

bool Bundle::FitsIn(int m) const {
  if (m >= kMaxGoods) return true;
  if (m <= 0) return mask_ == 0;
  return (mask_ >> m) == 0;
}

std::vector<int> Bundle::Indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string Bundle::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int g : Indices()) {
    if (!first) os << ',';
    os << g;
    first = false;
  }
  os << '}';
  return os.str();
}

bool CanonicalLess(Bundle a, Bundle b) {
  const uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // Members below the lowest differing good are shared, so the sorted lists
  // agree up to that point. The list holding it is smaller unless the other
  // list has already ended there (a proper prefix is smaller).
  const int x = std::countr_zero(diff);
  const uint64_t above = x == 63 ? 0 : ~((uint64_t{1} << (x + 1)) - 1);
  if (a.Contains(x)) return (b.mask() & above) != 0;
  return (a.mask() & above) == 0;
}

std::string Allocation::ToString() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < bundles.size(); ++i) {
    if (i) os << ", ";
    os << bundles[i].ToString();
  }
  os << ')';
  return os.str();
}

Allocation AllocationFromAssignment(std::span<const int> owner, int n) {
  Allocation alloc(n);
  for (size_t g = 0; g < owner.size(); ++g) {
    alloc[owner[g]] = alloc[owner[g]].With(static_cast<int>(g));
  }
  return alloc;
}

}  // namespace mmslab
