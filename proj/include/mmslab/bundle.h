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

#ifndef MMSLAB_BUNDLE_H_
#define MMSLAB_BUNDLE_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mmslab {

// Goods are 0-based indices. A bundle never holds more than kMaxGoods goods.
inline constexpr int kMaxGoods = 64;

// A set of goods stored as a bitmask. Bit g set means good g is a member.
class Bundle {
 public:
  constexpr Bundle() = default;

  static constexpr Bundle FromMask(uint64_t mask) { return Bundle(mask); }
  // Throws InputError on duplicates or indices outside [0, kMaxGoods).
  static Bundle FromIndices(std::span<const int> indices);
  static Bundle FromIndices(std::initializer_list<int> indices);
  // {0, ..., m-1}.
  static Bundle Full(int m);

  constexpr uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool Contains(int good) const { return (mask_ >> good) & 1u; }
  constexpr bool IsSubsetOf(Bundle other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool Intersects(Bundle other) const {
    return (mask_ & other.mask_) != 0;
  }
  // True iff every member is below m.
  bool FitsIn(int m) const;

  constexpr Bundle With(int good) const {
    return Bundle(mask_ | (uint64_t{1} << good));
  }
  constexpr Bundle Without(int good) const {
    return Bundle(mask_ & ~(uint64_t{1} << good));
  }

  // Sorted ascending.
  std::vector<int> Indices() const;
  // "{0,2,3}"; the empty bundle renders as "{}".
  std::string ToString() const;

  friend constexpr Bundle operator|(Bundle a, Bundle b) {
    return Bundle(a.mask_ | b.mask_);
  }
  friend constexpr Bundle operator&(Bundle a, Bundle b) {
    return Bundle(a.mask_ & b.mask_);
  }
  friend constexpr Bundle operator-(Bundle a, Bundle b) {
    return Bundle(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Bundle a, Bundle b) = default;

 private:
  constexpr explicit Bundle(uint64_t mask) : mask_(mask) {}

  uint64_t mask_ = 0;
};

// Canonical bundle order: lexicographic comparison of the sorted index lists.
// This is the tie-break used everywhere a "smallest bundle" is required.
bool CanonicalLess(Bundle a, Bundle b);

// Calls fn(Bundle) for every subset of `within` with exactly k members, in
// canonical order. Returns early if fn returns false.
template <typename Fn>
void ForEachSubsetOfSize(Bundle within, int k, Fn&& fn) {
  std::vector<int> pool = within.Indices();
  const int size = static_cast<int>(pool.size());
  if (k < 0 || k > size) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    uint64_t mask = 0;
    for (int i : pick) mask |= uint64_t{1} << pool[i];
    if (!fn(Bundle::FromMask(mask))) return;
    int i = k - 1;
    while (i >= 0 && pick[i] == size - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// An ordered n-tuple of bundles; bundle i belongs to agent i.
struct Allocation {
  std::vector<Bundle> bundles;

  Allocation() = default;
  explicit Allocation(std::vector<Bundle> b) : bundles(std::move(b)) {}
  explicit Allocation(int n) : bundles(n) {}

  int num_agents() const { return static_cast<int>(bundles.size()); }
  const Bundle& operator[](int agent) const { return bundles[agent]; }
  Bundle& operator[](int agent) { return bundles[agent]; }

  std::string ToString() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Builds an allocation from an assignment vector (owner of each good).
Allocation AllocationFromAssignment(std::span<const int> owner, int n);

}  // namespace mmslab

#endif  // MMSLAB_BUNDLE_H_
