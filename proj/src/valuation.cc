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

#include "mmslab/valuation.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

void RequireFiniteNonNegative(std::span<const double> values,
                              const std::string& what) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw InputError(what + "[" + std::to_string(i) +
                       "] must be finite and non-negative");
    }
  }
}

// Sum over members in ascending good order.
double SumOver(std::span<const double> values, uint64_t mask) {
  double sum = 0.0;
  for (; mask != 0; mask &= mask - 1) sum += values[std::countr_zero(mask)];
  return sum;
}

// Per-mask sums built by adding the highest member last, which reproduces
// SumOver's left-to-right accumulation exactly.
std::vector<double> TabulateSums(std::span<const double> values) {
  const int m = static_cast<int>(values.size());
  std::vector<double> sums(size_t{1} << m, 0.0);
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    const int high = 63 - std::countl_zero(mask);
    sums[mask] = sums[mask & ~(uint64_t{1} << high)] + values[high];
  }
  return sums;
}

}  // namespace

const char* ValuationKindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kTable:
      return "table";
    case ValuationKind::kXos:
      return "xos";
    case ValuationKind::kSizeAnchored:
      return "size_anchored";
  }
  return "unknown";
}

Valuation Valuation::Additive(std::vector<double> values) {
  if (values.size() > static_cast<size_t>(kMaxGoods)) {
    throw InputError("additive valuation has more than 64 goods");
  }
  RequireFiniteNonNegative(values, "values");
  const int m = static_cast<int>(values.size());
  return Valuation(AdditiveRep{std::move(values)}, m);
}

Valuation Valuation::Table(std::vector<double> values_by_mask) {
  const size_t size = values_by_mask.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw InputError("table valuation needs 2^m entries, got " +
                     std::to_string(size));
  }
  const int m = std::countr_zero(size);
  if (m > kMaxTableGoods) {
    throw ResourceError("table valuation over " + std::to_string(m) +
                        " goods exceeds the cap of " +
                        std::to_string(kMaxTableGoods));
  }
  RequireFiniteNonNegative(values_by_mask, "table");
  if (values_by_mask[0] != 0.0) {
    throw InputError("table valuation must map the empty bundle to 0");
  }
  return Valuation(TableRep{std::move(values_by_mask)}, m);
}

Valuation Valuation::Xos(std::vector<std::vector<double>> clauses) {
  if (clauses.empty()) throw InputError("xos valuation needs >= 1 clause");
  const size_t m = clauses.front().size();
  if (m > static_cast<size_t>(kMaxGoods)) {
    throw InputError("xos valuation has more than 64 goods");
  }
  for (size_t l = 0; l < clauses.size(); ++l) {
    if (clauses[l].size() != m) {
      throw InputError("xos clause " + std::to_string(l) +
                       " has the wrong length");
    }
    RequireFiniteNonNegative(clauses[l], "clauses[" + std::to_string(l) + "]");
  }
  return Valuation(XosRep{std::move(clauses)}, static_cast<int>(m));
}

Valuation Valuation::SizeAnchored(std::vector<double> base,
                                  std::vector<double> deltas, double scale) {
  if (deltas.size() > static_cast<size_t>(kMaxGoods)) {
    throw InputError("size-anchored valuation has more than 64 goods");
  }
  if (base.size() != deltas.size() + 1) {
    throw InputError("size-anchored base needs m + 1 entries");
  }
  RequireFiniteNonNegative(base, "base");
  RequireFiniteNonNegative(deltas, "deltas");
  if (!std::isfinite(scale) || scale < 0.0) {
    throw InputError("size-anchored scale must be finite and non-negative");
  }
  if (base[0] != 0.0) throw InputError("size-anchored base[0] must be 0");
  const int m = static_cast<int>(deltas.size());
  return Valuation(SizeAnchoredRep{std::move(base), std::move(deltas), scale},
                   m);
}

ValuationKind Valuation::kind() const {
  return static_cast<ValuationKind>(rep_.index());
}

double Valuation::Value(Bundle bundle) const {
  if (!bundle.FitsIn(num_goods_)) {
    throw InputError("bundle " + bundle.ToString() + " has goods outside [0, " +
                     std::to_string(num_goods_) + ")");
  }
  if (const TableRep* t = table()) {
    if (bundle.mask() >= t->values.size()) {
      throw RepresentationError("table has no entry for " + bundle.ToString());
    }
  }
  return ValueUnchecked(bundle.mask());
}

double Valuation::ValueUnchecked(uint64_t mask) const {
  if (const AdditiveRep* a = additive()) return SumOver(a->values, mask);
  if (const TableRep* t = table()) return t->values[mask];
  if (const XosRep* x = xos()) {
    double best = 0.0;
    for (const auto& clause : x->clauses) {
      best = std::max(best, SumOver(clause, mask));
    }
    return best;
  }
  const SizeAnchoredRep& s = *size_anchored();
  return s.base[std::popcount(mask)] + s.scale * SumOver(s.deltas, mask);
}

Valuation Scaled(const Valuation& v, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InputError("scale factor must be positive and finite");
  }
  auto scale_all = [factor](std::vector<double> xs) {
    for (double& x : xs) x *= factor;
    return xs;
  };
  if (const AdditiveRep* a = v.additive()) {
    return Valuation::Additive(scale_all(a->values));
  }
  if (const TableRep* t = v.table()) {
    return Valuation::Table(scale_all(t->values));
  }
  if (const XosRep* x = v.xos()) {
    std::vector<std::vector<double>> clauses;
    for (const auto& c : x->clauses) clauses.push_back(scale_all(c));
    return Valuation::Xos(std::move(clauses));
  }
  const SizeAnchoredRep& s = *v.size_anchored();
  return Valuation::SizeAnchored(scale_all(s.base), s.deltas, s.scale * factor);
}

Valuation PermuteGoods(const Valuation& v, std::span<const int> perm) {
  const int m = v.num_goods();
  if (static_cast<int>(perm.size()) != m) {
    throw InputError("permutation length does not match the good count");
  }
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[p]) throw InputError("not a permutation");
    seen[p] = true;
  }
  auto permute = [&](const std::vector<double>& xs) {
    std::vector<double> out(m);
    for (int g = 0; g < m; ++g) out[perm[g]] = xs[g];
    return out;
  };
  if (const AdditiveRep* a = v.additive()) {
    return Valuation::Additive(permute(a->values));
  }
  if (const TableRep* t = v.table()) {
    std::vector<double> out(t->values.size());
    for (uint64_t mask = 0; mask < t->values.size(); ++mask) {
      uint64_t image = 0;
      for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        image |= uint64_t{1} << perm[std::countr_zero(rest)];
      }
      out[image] = t->values[mask];
    }
    return Valuation::Table(std::move(out));
  }
  if (const XosRep* x = v.xos()) {
    std::vector<std::vector<double>> clauses;
    for (const auto& c : x->clauses) clauses.push_back(permute(c));
    return Valuation::Xos(std::move(clauses));
  }
  const SizeAnchoredRep& s = *v.size_anchored();
  return Valuation::SizeAnchored(s.base, permute(s.deltas), s.scale);
}

std::vector<double> Tabulate(const Valuation& v) {
  const int m = v.num_goods();
  if (m > ValueOracle::kMaxTabulatedGoods) {
    throw ResourceError("cannot tabulate a valuation over " +
                        std::to_string(m) + " goods");
  }
  if (const TableRep* t = v.table()) return t->values;
  if (const AdditiveRep* a = v.additive()) return TabulateSums(a->values);
  if (const XosRep* x = v.xos()) {
    std::vector<double> best(size_t{1} << m, 0.0);
    for (const auto& clause : x->clauses) {
      std::vector<double> sums = TabulateSums(clause);
      for (size_t i = 0; i < best.size(); ++i) {
        best[i] = std::max(best[i], sums[i]);
      }
    }
    return best;
  }
  const SizeAnchoredRep& s = *v.size_anchored();
  std::vector<double> out = TabulateSums(s.deltas);
  for (uint64_t mask = 0; mask < out.size(); ++mask) {
    out[mask] = s.base[std::popcount(mask)] + s.scale * out[mask];
  }
  return out;
}

ValueOracle::ValueOracle(const Valuation& v) : valuation_(&v) {
  if (v.num_goods() <= kMaxTabulatedGoods) table_ = Tabulate(v);
}

}  // namespace mmslab
