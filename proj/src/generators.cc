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

#include "mmslab/generators.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mmslab/classify.h"
#include "mmslab/errors.h"
#include "mmslab/random.h"

namespace mmslab {
namespace {

constexpr int kMaxRetries = 16;

struct Element {
  double weight;
  uint64_t cover;  // goods covering the element
};

double Param(const GeneratorConfig& cfg, const std::string& key, double fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

void CheckShape(const GeneratorConfig& cfg) {
  if (cfg.n < 1) throw InputError("generator needs n >= 1");
  if (cfg.m < 0) throw InputError("generator needs m >= 0");
  const int cap = MaxGoodsFor(cfg.cls);
  if (cfg.m > cap) {
    throw ResourceError(std::string(GeneratorClassName(cfg.cls)) + " supports m <= " +
                        std::to_string(cap) + ", got m = " + std::to_string(cfg.m));
  }
}

std::string NormalizedFamily(const GeneratorConfig& cfg) {
  const std::string& f = cfg.family.empty() ? std::string("mixed") : cfg.family;
  switch (cfg.cls) {
    case GeneratorClass::kSubmodularLeveled:
      if (f == "size-anchored" || f == "coverage" || f == "clustered" ||
          f == "mixed") {
        return f;
      }
      break;
    case GeneratorClass::kSubmodular:
      if (f == "coverage" || f == "clustered" || f == "mixed") return f;
      break;
    case GeneratorClass::kSubadditiveLeveled:
      if (f == "sqrt" || f == "tiered" || f == "mixed") return f;
      break;
    default:
      if (f == "default" || f == "mixed") return "default";
      break;
  }
  throw InputError("unknown family '" + f + "' for " + GeneratorClassName(cfg.cls));
}

std::vector<double> CoverageTable(int m, const std::vector<Element>& elements) {
  const uint64_t full = uint64_t{1} << m;
  std::vector<double> table(full, 0.0);
  for (uint64_t mask = 1; mask < full; ++mask) {
    double sum = 0.0;
    for (const Element& e : elements) {
      if (e.cover & mask) sum += e.weight;
    }
    table[mask] = sum;
  }
  return table;
}

// Elements hit by random subsets of goods.
std::vector<Element> RandomCoverage(Rng& rng, int m) {
  std::vector<Element> out;
  if (m == 0) return out;
  const int count = rng.Between(m, 2 * m);
  const double p = rng.Uniform(0.2, 0.5);
  for (int e = 0; e < count; ++e) {
    Element el{rng.Uniform(0.2, 1.0), 0};
    for (int g = 0; g < m; ++g) {
      if (rng.Bernoulli(p)) el.cover |= uint64_t{1} << g;
    }
    if (el.cover == 0) el.cover = uint64_t{1} << rng.Below(m);
    out.push_back(el);
  }
  return out;
}

// Each good belongs to one heavy cluster element; goods in the same cluster
// substitute for each other. Light private elements break ties.
std::vector<Element> ClusteredCoverage(Rng& rng, int m) {
  std::vector<Element> out;
  if (m == 0) return out;
  const int clusters = rng.Between(2, std::max(2, m / 2));
  for (int c = 0; c < clusters; ++c) out.push_back({rng.Uniform(0.95, 1.05), 0});
  // Near-equal cluster sizes: deal a shuffled good order round robin.
  std::vector<int> goods(m);
  for (int g = 0; g < m; ++g) goods[g] = g;
  for (int g = m - 1; g > 0; --g) std::swap(goods[g], goods[rng.Below(g + 1)]);
  for (int g = 0; g < m; ++g) {
    out[g % clusters].cover |= uint64_t{1} << goods[g];
  }
  std::erase_if(out, [](const Element& e) { return e.cover == 0; });
  for (int g = 0; g < m; ++g) {
    if (rng.Bernoulli(0.5)) out.push_back({rng.Uniform(0.0, 0.05), uint64_t{1} << g});
  }
  return out;
}

Valuation SizeAnchoredDraw(Rng& rng, int m, double scale_fraction) {
  std::vector<double> draws(m);
  for (double& d : draws) d = rng.Uniform01();
  std::sort(draws.begin(), draws.end(), std::greater<>());
  std::vector<double> base(m + 1, 0.0);
  double min_inc = 1.0;
  for (int j = 1; j <= m; ++j) {
    // Strictly decreasing increments: strictly concave, strictly increasing.
    const double inc = 0.5 + 0.5 * draws[j - 1] + (m - j) * 1e-3;
    base[j] = base[j - 1] + inc;
    min_inc = std::min(min_inc, inc);
  }
  std::vector<double> deltas(m);
  double total = 0.0;
  for (double& d : deltas) {
    d = rng.Uniform01();
    total += d;
  }
  const double scale = total > 0 ? scale_fraction * min_inc / total : 0.0;
  return Valuation::SizeAnchored(std::move(base), std::move(deltas), scale);
}

// Coverage truncated at a budget, plus a strictly concave cardinality term
// large enough that every bundle outvalues every smaller one. The budget is
// the smallest coverage among bundles of a random size, so large bundles
// collapse onto one level and the cardinality term stays small.
Valuation LeveledCoverageDraw(Rng& rng, int m, bool clustered) {
  std::vector<Element> elements =
      clustered ? ClusteredCoverage(rng, m) : RandomCoverage(rng, m);
  std::vector<double> cov = CoverageTable(m, elements);
  std::vector<double> max_by_size(m + 1, -1.0), min_by_size(m + 1, 1e300);
  for (uint64_t mask = 0; mask < cov.size(); ++mask) {
    const int k = std::popcount(mask);
    min_by_size[k] = std::min(min_by_size[k], cov[mask]);
  }
  const double budget = m >= 3 ? min_by_size[rng.Between(3, m)] : min_by_size[m];
  std::fill(min_by_size.begin(), min_by_size.end(), 1e300);
  for (uint64_t mask = 0; mask < cov.size(); ++mask) {
    cov[mask] = std::min(cov[mask], budget);
    const int k = std::popcount(mask);
    max_by_size[k] = std::max(max_by_size[k], cov[mask]);
    min_by_size[k] = std::min(min_by_size[k], cov[mask]);
  }
  double mean_weight = 0.0;
  for (const Element& e : elements) mean_weight += e.weight;
  mean_weight /= std::max<size_t>(1, elements.size());
  const double margin = 0.05 * std::max(mean_weight, 0.1);
  const double gamma = 0.01 * margin;
  // raw[j] = r_{j-1} + margin, r_k = max cover of k goods - min cover of k+1.
  std::vector<double> inc(m + 2, 0.0);
  double suffix = 0.0;
  for (int j = m; j >= 1; --j) {
    const double r = std::max(0.0, max_by_size[j - 1] - min_by_size[j]);
    suffix = std::max(suffix, r + margin);
    inc[j] = suffix + gamma * (m - j + 1);
  }
  std::vector<double> base(m + 1, 0.0);
  for (int j = 1; j <= m; ++j) base[j] = base[j - 1] + inc[j];
  for (uint64_t mask = 1; mask < cov.size(); ++mask) {
    cov[mask] += base[std::popcount(mask)];
  }
  return Valuation::Table(std::move(cov));
}

using Draw = std::function<Valuation(Rng&)>;
using Check = std::function<bool(const Valuation&)>;

// Uneven single-good values w in [0.35, 1); every larger bundle sits on a
// ladder v(S) = W + (|S| - 2) d + noise with W between the largest single
// good and the smallest two-good sum.
Valuation TieredDraw(Rng& rng, int m) {
  std::vector<double> w(m);
  double low = 0, high = 0, min_pair = 0;
  for (int attempt = 0;; ++attempt) {
    for (double& x : w) x = rng.Uniform(0.35, 1.0);
    std::vector<double> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    low = m > 0 ? sorted.front() : 0.0;
    high = m > 0 ? sorted.back() : 0.0;
    min_pair = m > 1 ? sorted[0] + sorted[1] : 2.0 * high + 1.0;
    if (min_pair > high || attempt >= 64) break;
  }
  const double top = std::max(high, 0.0);
  const double pair_base = top + (min_pair - top) * rng.Uniform(0.1, 0.6);
  const double step = 0.5 * low;
  const double jitter =
      std::max(0.0, 0.9 * std::min({0.5 * step, min_pair - pair_base, pair_base - 2 * step}));
  std::vector<double> table(uint64_t{1} << m, 0.0);
  for (uint64_t mask = 1; mask < table.size(); ++mask) {
    const int size = std::popcount(mask);
    table[mask] = size == 1 ? w[std::countr_zero(mask)]
                            : pair_base + (size - 2) * step + jitter * rng.Uniform01();
  }
  return Valuation::Table(std::move(table));
}

Instance Build(const GeneratorConfig& cfg, const std::string& family,
               DeclaredClass declared, const Draw& draw, const Check& check,
               std::map<std::string, double> params) {
  Rng rng(cfg.seed);
  std::vector<Valuation> vals;
  for (int i = 0; i < cfg.n; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxRetries && !accepted; ++attempt) {
      Valuation v = draw(rng);
      if (check(v)) {
        vals.push_back(std::move(v));
        accepted = true;
      }
    }
    if (!accepted) {
      throw InvariantViolationError(
          std::string("generator ") + GeneratorClassName(cfg.cls) +
          " failed validation " + std::to_string(kMaxRetries) + " times (agent " +
          std::to_string(i) + ", seed " + std::to_string(cfg.seed) + ")");
    }
  }
  Instance inst = MakeInstance(std::move(vals), cfg.m);
  inst.declared_classes.assign(cfg.n, declared);
  inst.provenance.source = std::string("generator:") + GeneratorClassName(cfg.cls) +
                           (family == "default" ? "" : "/" + family);
  inst.provenance.rng_algorithm = kRngAlgorithm;
  inst.provenance.seed = cfg.seed;
  inst.provenance.params = std::move(params);
  return inst;
}

bool Leveled(const Valuation& v) {
  if (v.num_goods() > ClassifyLimits{}.leveled_cap) return true;
  return IsLeveled(v).holds;
}
bool Submodular(const Valuation& v) {
  if (v.num_goods() > ClassifyLimits{}.submodular_cap) return true;
  return IsMonotone(v).holds && IsSubmodular(v).holds;
}
bool Subadditive(const Valuation& v) {
  if (v.num_goods() > ClassifyLimits{}.submodular_cap) return true;
  return IsSubadditive(v).holds;
}

}  // namespace

const char* GeneratorClassName(GeneratorClass cls) {
  switch (cls) {
    case GeneratorClass::kAdditiveLeveled: return "additive-leveled";
    case GeneratorClass::kSubmodularLeveled: return "submodular-leveled";
    case GeneratorClass::kSubadditiveLeveled: return "subadditive-leveled";
    case GeneratorClass::kSubmodular: return "submodular";
    case GeneratorClass::kTableLeveled: return "table-leveled";
  }
  return "?";
}

std::vector<GeneratorClass> AllGeneratorClasses() {
  return {GeneratorClass::kAdditiveLeveled, GeneratorClass::kSubmodularLeveled,
          GeneratorClass::kSubadditiveLeveled, GeneratorClass::kSubmodular,
          GeneratorClass::kTableLeveled};
}

GeneratorClass ParseGeneratorClass(const std::string& text) {
  for (GeneratorClass c : AllGeneratorClasses()) {
    if (text == GeneratorClassName(c)) return c;
  }
  throw InputError("unknown generator class '" + text + "'");
}

int MaxGoodsFor(GeneratorClass cls) {
  switch (cls) {
    case GeneratorClass::kAdditiveLeveled: return kMaxGoods;
    case GeneratorClass::kSubmodularLeveled: return kMaxGoods;
    default: return kMaxTableGoods;
  }
}

Instance GenAdditiveLeveled(const GeneratorConfig& cfg) {
  CheckShape(cfg);
  const std::string family = NormalizedFamily(cfg);
  const double spread = Param(cfg, "spread", 1.0);
  if (!(spread > 0 && spread <= 1)) throw InputError("spread must lie in (0, 1]");
  const int m = cfg.m;
  auto draw = [&](Rng& rng) {
    std::vector<double> values(m);
    for (double& x : values) x = 1.0 + spread / m * rng.UniformOpen();
    return Valuation::Additive(std::move(values));
  };
  return Build(cfg, family, {ValuationClass::kAdditive, true}, draw, Leveled,
               {{"spread", spread}});
}

Instance GenSubmodularLeveled(const GeneratorConfig& cfg) {
  CheckShape(cfg);
  const std::string family = NormalizedFamily(cfg);
  const double scale = Param(cfg, "scale", 0.9);
  if (!(scale >= 0 && scale < 1)) throw InputError("scale must lie in [0, 1)");
  const int m = cfg.m;
  if (family != "size-anchored" && family != "mixed" && m > kMaxTableGoods) {
    throw ResourceError(family + " family needs m <= " + std::to_string(kMaxTableGoods));
  }
  const bool tables_ok = m <= kMaxTableGoods;
  auto draw = [&](Rng& rng) {
    std::string pick = family;
    if (family == "mixed") {
      const uint64_t r = tables_ok ? rng.Below(3) : 0;
      pick = r == 0 ? "size-anchored" : r == 1 ? "coverage" : "clustered";
    }
    if (pick == "size-anchored") return SizeAnchoredDraw(rng, m, scale);
    return LeveledCoverageDraw(rng, m, pick == "clustered");
  };
  auto check = [](const Valuation& v) { return Leveled(v) && Submodular(v); };
  return Build(cfg, family, {ValuationClass::kSubmodular, true}, draw, check,
               {{"scale", scale}});
}

Instance GenSubadditiveLeveled(const GeneratorConfig& cfg) {
  CheckShape(cfg);
  const std::string family = NormalizedFamily(cfg);
  const double fraction = Param(cfg, "delta", 0.9);
  if (!(fraction > 0 && fraction < 1)) throw InputError("delta must lie in (0, 1)");
  const int m = cfg.m;
  // sqrt(k+1) - sqrt(k) > 1/(2 sqrt(m)) for k < m, and
  // sqrt(a) + sqrt(b) - sqrt(a+b) >= 2 - sqrt(2) for a, b >= 1.
  const double cap = std::min(m > 0 ? 1.0 / (2.0 * std::sqrt(m)) : 1.0,
                              2.0 - std::sqrt(2.0));
  const double noise = fraction * cap;
  auto sqrt_draw = [&](Rng& rng) {
    std::vector<double> table(uint64_t{1} << m, 0.0);
    for (uint64_t mask = 1; mask < table.size(); ++mask) {
      table[mask] = std::sqrt(static_cast<double>(std::popcount(mask))) +
                    noise * rng.Uniform01();
    }
    return Valuation::Table(std::move(table));
  };
  auto draw = [&](Rng& rng) {
    const bool tiered = family == "tiered" || (family == "mixed" && rng.Bernoulli(0.5));
    return tiered ? TieredDraw(rng, m) : sqrt_draw(rng);
  };
  auto check = [](const Valuation& v) { return Leveled(v) && Subadditive(v); };
  return Build(cfg, family, {ValuationClass::kSubadditive, true}, draw, check,
               {{"delta", fraction}});
}

Instance GenSubmodular(const GeneratorConfig& cfg) {
  CheckShape(cfg);
  const std::string family = NormalizedFamily(cfg);
  const int m = cfg.m;
  auto draw = [&](Rng& rng) {
    bool clustered = family == "clustered";
    if (family == "mixed") clustered = rng.Bernoulli(0.5);
    auto elements = clustered ? ClusteredCoverage(rng, m) : RandomCoverage(rng, m);
    return Valuation::Table(CoverageTable(m, elements));
  };
  return Build(cfg, family, {ValuationClass::kSubmodular, false}, draw, Submodular, {});
}

Instance GenTableLeveled(const GeneratorConfig& cfg) {
  CheckShape(cfg);
  const std::string family = NormalizedFamily(cfg);
  const int m = cfg.m;
  auto draw = [&](Rng& rng) {
    std::vector<double> table(uint64_t{1} << m, 0.0);
    for (uint64_t mask = 1; mask < table.size(); ++mask) {
      table[mask] = std::popcount(mask) + 0.9 * rng.Uniform01();
    }
    return Valuation::Table(std::move(table));
  };
  return Build(cfg, family, {ValuationClass::kGeneral, true}, draw, Leveled, {});
}

Instance Generate(const GeneratorConfig& cfg) {
  switch (cfg.cls) {
    case GeneratorClass::kAdditiveLeveled: return GenAdditiveLeveled(cfg);
    case GeneratorClass::kSubmodularLeveled: return GenSubmodularLeveled(cfg);
    case GeneratorClass::kSubadditiveLeveled: return GenSubadditiveLeveled(cfg);
    case GeneratorClass::kSubmodular: return GenSubmodular(cfg);
    case GeneratorClass::kTableLeveled: return GenTableLeveled(cfg);
  }
  throw InputError("unknown generator class");
}

}  // namespace mmslab
