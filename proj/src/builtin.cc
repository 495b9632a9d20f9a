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

#include "mmslab/builtin.h"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "mmslab/errors.h"

namespace mmslab {
namespace {

void RequireFinite(double x, const char* name) {
  if (!std::isfinite(x)) throw InputError(std::string(name) + " must be finite");
}

}  // namespace

Instance BuiltinUnboundedLeveled(int n, double eps, double delta) {
  RequireFinite(eps, "eps");
  RequireFinite(delta, "delta");
  if (n < 2) throw InputError("unbounded-leveled needs n >= 2");
  if (n > 8) throw ResourceError("unbounded-leveled uses tables; n <= 8");
  if (eps <= 0 || delta <= 0) throw InputError("eps and delta must be positive");
  if (eps + delta >= 1) throw InputError("eps + delta must be below 1");
  const int m = 2 * n;
  const uint64_t full = uint64_t{1} << m;
  auto pair_mask = [](int a, int b) { return (uint64_t{1} << a) | (uint64_t{1} << b); };

  std::vector<uint64_t> plain_pairs;
  for (int j = 0; j < n; ++j) plain_pairs.push_back(pair_mask(2 * j, 2 * j + 1));
  std::vector<uint64_t> shifted_pairs = {pair_mask(0, m - 1)};
  for (int j = 0; j + 1 < n; ++j) {
    shifted_pairs.push_back(pair_mask(2 * j + 1, 2 * j + 2));
  }

  std::vector<Valuation> vals;
  for (int i = 0; i < n; ++i) {
    const auto& good_pairs = i + 1 < n ? plain_pairs : shifted_pairs;
    std::vector<double> table(full, 0.0);
    for (uint64_t mask = 1; mask < full; ++mask) {
      const int size = std::popcount(mask);
      if (size == 1) {
        table[mask] = eps;
      } else if (size == 2) {
        bool good = false;
        for (uint64_t p : good_pairs) good = good || p == mask;
        table[mask] = good ? 1.0 : eps + delta;
      } else {
        table[mask] = size + eps;
      }
    }
    vals.push_back(Valuation::Table(std::move(table)));
  }
  Instance inst = MakeInstance(std::move(vals), m);
  // Pairs below singletons-plus-singletons: leveled but not subadditive.
  inst.declared_classes.assign(n, DeclaredClass{ValuationClass::kGeneral, true});
  inst.provenance.source = "builtin:unbounded-leveled";
  inst.provenance.params = {{"n", n}, {"eps", eps}, {"delta", delta}};
  return inst;
}

Instance BuiltinXosUpper(double eps, int extra_type1_copies) {
  RequireFinite(eps, "eps");
  if (eps <= 0 || eps >= 1) throw InputError("xos-upper needs 0 < eps < 1");
  if (extra_type1_copies < 0) throw InputError("copies must be non-negative");
  if (extra_type1_copies > 62) throw InputError("too many copies");
  const Valuation type1 = Valuation::Xos({{1, 1, eps, eps}, {eps, eps, 1, 1}});
  const Valuation type2 = Valuation::Xos({{1, eps, eps, 1}, {eps, 1, 1, eps}});
  std::vector<Valuation> vals(1 + extra_type1_copies, type1);
  vals.push_back(type2);
  const int n = static_cast<int>(vals.size());
  Instance inst = MakeInstance(std::move(vals), 4);
  inst.declared_classes.assign(n, DeclaredClass{ValuationClass::kXos, true});
  inst.provenance.source = "builtin:xos-upper";
  inst.provenance.params = {{"eps", eps}, {"copies", extra_type1_copies}};
  return inst;
}

std::vector<std::string> BuiltinNames() { return {"unbounded-leveled", "xos-upper"}; }

Instance BuiltinByName(const std::string& name, int n, std::optional<double> eps,
                       std::optional<double> delta, int copies) {
  if (name == "unbounded-leveled") {
    return BuiltinUnboundedLeveled(n, eps.value_or(0.001), delta.value_or(0.0005));
  }
  if (name == "xos-upper") return BuiltinXosUpper(eps.value_or(0.01), copies);
  throw InputError("unknown builtin '" + name + "' (expected unbounded-leveled or xos-upper)");
}

}  // namespace mmslab
