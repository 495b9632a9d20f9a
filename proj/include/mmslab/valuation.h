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
// Valuation oracles.
//
// A valuation maps every bundle of goods to a non-negative real with
// v(empty) = 0. Four representations are supported:
//
//   Additive      v(S) = sum of per-good values
//   Table         explicit value for each of the 2^m bundles
//   Xos           v(S) = max over clauses of the clause's additive value
//   SizeAnchored  v(S) = base[|S|] + scale * sum of per-good deltas
//
// Additive sums are accumulated in ascending good order so that every
// evaluation path (direct or tabulated) produces bit-identical doubles.

#ifndef MMSLAB_VALUATION_H_
#define MMSLAB_VALUATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mmslab/bundle.h"

namespace mmslab {

// Absolute tolerance for every fairness comparison unless stated otherwise.
inline constexpr double kDefaultTolerance = 1e-9;

// Table valuations store 2^m doubles; m is capped to bound memory.
inline constexpr int kMaxTableGoods = 16;

struct AdditiveRep {
  std::vector<double> values;
  friend bool operator==(const AdditiveRep&, const AdditiveRep&) = default;
};

// values[mask] is the value of the bundle with that bitmask.
struct TableRep {
  std::vector<double> values;
  friend bool operator==(const TableRep&, const TableRep&) = default;
};

struct XosRep {
  std::vector<std::vector<double>> clauses;
  friend bool operator==(const XosRep&, const XosRep&) = default;
};

struct SizeAnchoredRep {
  std::vector<double> base;    // m + 1 entries, base[0] == 0
  std::vector<double> deltas;  // m entries
  double scale = 0.0;
  friend bool operator==(const SizeAnchoredRep&,
                         const SizeAnchoredRep&) = default;
};

enum class ValuationKind { kAdditive, kTable, kXos, kSizeAnchored };

const char* ValuationKindName(ValuationKind kind);

class Valuation {
 public:
  // Factories validate their input and throw InputError on violations
  // (negative or non-finite numbers, v(empty) != 0, length mismatches).
  static Valuation Additive(std::vector<double> values);
  static Valuation Table(std::vector<double> values_by_mask);
  static Valuation Xos(std::vector<std::vector<double>> clauses);
  static Valuation SizeAnchored(std::vector<double> base,
                                std::vector<double> deltas, double scale);

  ValuationKind kind() const;
  int num_goods() const { return num_goods_; }

  // Throws InputError if the bundle has a member >= num_goods().
  double Value(Bundle bundle) const;
  // No bounds check; callers guarantee mask < 2^num_goods().
  double ValueUnchecked(uint64_t mask) const;

  const AdditiveRep* additive() const { return std::get_if<AdditiveRep>(&rep_); }
  const TableRep* table() const { return std::get_if<TableRep>(&rep_); }
  const XosRep* xos() const { return std::get_if<XosRep>(&rep_); }
  const SizeAnchoredRep* size_anchored() const {
    return std::get_if<SizeAnchoredRep>(&rep_);
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  using Rep = std::variant<AdditiveRep, TableRep, XosRep, SizeAnchoredRep>;
  Valuation(Rep rep, int num_goods) : rep_(std::move(rep)), num_goods_(num_goods) {}

  Rep rep_;
  int num_goods_ = 0;
};

// Multiplies every stored number by factor > 0 (scale covariance checks).
Valuation Scaled(const Valuation& v, double factor);

// Relabels goods: good g of `v` becomes good perm[g] of the result.
Valuation PermuteGoods(const Valuation& v, std::span<const int> perm);

// All 2^m values of a valuation, indexed by mask. Equal bit-for-bit to
// Value() on every bundle.
std::vector<double> Tabulate(const Valuation& v);

// Evaluation front end for hot loops: tabulates small valuations once and
// falls back to direct evaluation when 2^m would be too large.
class ValueOracle {
 public:
  static constexpr int kMaxTabulatedGoods = 20;

  explicit ValueOracle(const Valuation& v);

  double operator()(uint64_t mask) const {
    return table_.empty() ? valuation_->ValueUnchecked(mask) : table_[mask];
  }
  double operator()(Bundle b) const { return (*this)(b.mask()); }
  int num_goods() const { return valuation_->num_goods(); }

 private:
  const Valuation* valuation_;
  std::vector<double> table_;
};

}  // namespace mmslab

#endif  // MMSLAB_VALUATION_H_
