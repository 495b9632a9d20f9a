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

#include "mmslab/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmslab/allocators.h"
#include "mmslab/builtin.h"
#include "mmslab/classify.h"
#include "mmslab/fairness.h"
#include "mmslab/generators.h"
#include "mmslab/mechanisms.h"
#include "mmslab/mms.h"
#include "mmslab/random.h"
#include "mmslab/serialization.h"

namespace mmslab {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kTwoThirds = 2.0 / 3.0;

// JSON has no infinity; ratios against a zero share render as "inf".
ordered_json Num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

ordered_json Goods(Bundle b) { return b.Indices(); }

ordered_json AllocationJson(const Allocation& a) {
  ordered_json out = ordered_json::array();
  for (const Bundle& b : a.bundles) out.push_back(Goods(b));
  return out;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

struct Globals {
  bool json = false;
  uint64_t max_states = 0;  // 0: default / environment
  int po_max_goods = 0;
  int po_max_agents = 0;
  int leveled_cap = 0;
  int submodular_cap = 0;

  SearchLimits Limits() const {
    SearchLimits l = DefaultSearchLimits();
    if (max_states > 0) l.max_states = max_states;
    if (po_max_goods > 0) l.po_max_goods = po_max_goods;
    if (po_max_agents > 0) l.po_max_agents = po_max_agents;
    return l;
  }
  ClassifyLimits Classify() const {
    ClassifyLimits l;
    if (leveled_cap > 0) l.leveled_cap = leveled_cap;
    if (submodular_cap > 0) l.submodular_cap = submodular_cap;
    return l;
  }
};

// Plain-text rendering of a report: one "path: value" line per leaf, with
// short arrays of scalars kept on one line.
void RenderText(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  auto scalar_array = [](const ordered_json& a) {
    if (!a.is_array() || a.size() > 16) return false;
    for (const auto& x : a) {
      if (x.is_structured() && !(x.is_array() && x.size() <= 16 &&
                                 std::all_of(x.begin(), x.end(),
                                             [](const auto& y) { return y.is_primitive(); }))) {
        return false;
      }
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      RenderText(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !scalar_array(j)) {
    for (size_t k = 0; k < j.size(); ++k) {
      RenderText(j[k], prefix + "[" + std::to_string(k) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void Emit(const Globals& g, const ordered_json& report, std::ostream& out) {
  if (g.json) {
    out << report.dump(2) << "\n";
  } else {
    RenderText(report, "", out);
  }
}

ordered_json ReportHeader(const std::string& command, const std::vector<std::string>& args) {
  ordered_json r;
  r["command"] = command;
  r["args"] = args;
  return r;
}

ordered_json InstanceInfo(const Instance& inst) {
  ordered_json j;
  j["digest"] = InstanceDigest(inst);
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["tolerance"] = inst.tolerance;
  if (!inst.provenance.source.empty()) j["source"] = inst.provenance.source;
  if (inst.provenance.seed) j["seed"] = *inst.provenance.seed;
  return j;
}

ordered_json ProfileJson(const MmsProfile& p) {
  ordered_json mu = ordered_json::array();
  ordered_json witnesses = ordered_json::array();
  for (int i = 0; i < p.num_agents(); ++i) {
    mu.push_back(p.mu[i]);
    witnesses.push_back(AllocationJson(p.witnesses[i]));
  }
  return {{"mu", mu}, {"witnesses", witnesses}};
}

ordered_json RatioJson(const RatioAudit& a) {
  ordered_json values = ordered_json::array();
  ordered_json ratios = ordered_json::array();
  for (size_t i = 0; i < a.values.size(); ++i) {
    values.push_back(a.values[i]);
    ratios.push_back(Num(a.ratios[i]));
  }
  return {{"values", values},
          {"ratios", ratios},
          {"min_ratio", Num(a.min_ratio)},
          {"argmin_agent", a.argmin_agent}};
}

ordered_json FairnessJson(const FairnessReport& r) {
  ordered_json j;
  j["holds"] = r.holds;
  if (!r.violations.empty()) {
    ordered_json v = ordered_json::array();
    for (size_t k = 0; k < r.violations.size() && k < 10; ++k) {
      v.push_back(r.violations[k].ToString());
    }
    j["violations"] = v;
    j["violation_count"] = r.violations.size();
  }
  if (r.dominating) j["dominating"] = AllocationJson(*r.dominating);
  return j;
}

ordered_json TraceJson(const AllocatorTrace& t) {
  ordered_json j;
  j["algorithm"] = t.algorithm;
  j["branch"] = t.branch;
  j["steps"] = t.steps.size();
  j["reshuffle_used"] = t.reshuffle_used;
  j["fallback_used"] = t.fallback_used;
  if (!t.warnings.empty()) j["warnings"] = t.warnings;
  ordered_json steps = ordered_json::array();
  for (const TraceStep& s : t.steps) {
    std::ostringstream os;
    os << TraceActionName(s.action);
    if (s.agent >= 0) os << " agent " << s.agent;
    if (!s.bundle.empty()) os << " " << s.bundle.ToString();
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    steps.push_back(os.str());
  }
  j["log"] = steps;
  return j;
}

// Guaranteed MMS fraction; sdq-efx guarantees EFX instead.
double Bound(const std::string& algo) {
  if (algo == "few-items") return 1.0;
  if (algo == "submod-23" || algo == "two-submod-23") return kTwoThirds;
  if (algo == "subadd-half") return 0.5;
  return 0.0;
}

const std::vector<std::string> kAlgorithms = {"sdq-efx", "few-items", "submod-23",
                                              "two-submod-23", "subadd-half"};

AllocatorTrace RunAlgorithm(const std::string& algo, const Instance& inst,
                            const MmsProfile* profile, const PickOrder& order,
                            std::optional<int> anchor) {
  if (algo == "sdq-efx") return SdqEfx(inst, order);
  if (algo == "few-items") return FewItemsAllocate(inst, order);
  if (profile == nullptr) throw PreconditionError(algo + " needs maximin shares");
  if (algo == "submod-23") return SubmodularLeveled23(inst, *profile);
  if (algo == "two-submod-23") return TwoSubmodular23(inst, *profile);
  if (algo == "subadd-half") return SubadditiveHalf(inst, *profile, anchor);
  throw InputError("unknown algorithm '" + algo + "'");
}

// ---------------------------------------------------------------- validate

int CmdValidate(const Globals& g, const std::string& path,
                const std::vector<std::string>& args, std::ostream& out) {
  const Instance inst = LoadInstance(path);
  ordered_json r = ReportHeader("validate", args);
  r["instance"] = InstanceInfo(inst);
  const auto all = ClassifyAll(inst, g.Classify());
  bool violated = false;
  ordered_json agents = ordered_json::array();
  for (const auto& a : all) {
    ordered_json aj;
    aj["agent"] = a.agent;
    if (!inst.declared_classes.empty()) {
      aj["declared"] = inst.declared_classes[a.agent].ToString();
    }
    ordered_json reports = ordered_json::object();
    for (const ClassReport& c : a.reports) {
      ordered_json cj;
      cj["decided"] = c.decided;
      cj["holds"] = c.holds;
      if (c.witness) cj["witness"] = c.witness->ToString();
      if (!c.note.empty()) cj["note"] = c.note;
      reports[c.class_name] = cj;
      if ((c.class_name == "normalized" || c.class_name == "monotone") && c.decided &&
          !c.holds) {
        violated = true;
      }
    }
    aj["classes"] = reports;
    if (!a.mismatches.empty()) {
      aj["mismatches"] = a.mismatches;
      violated = true;
    }
    agents.push_back(aj);
  }
  r["agents"] = agents;
  r["ok"] = !violated;
  Emit(g, r, out);
  return violated ? kExitViolation : kExitOk;
}

// --------------------------------------------------------------------- mms

int CmdMms(const Globals& g, const std::string& path, bool best,
           const std::vector<std::string>& args, std::ostream& out) {
  const auto start = Clock::now();
  const Instance inst = LoadInstance(path);
  ordered_json r = ReportHeader("mms", args);
  r["instance"] = InstanceInfo(inst);
  const MmsProfile profile = MmsAll(inst, g.Limits());
  r["mms"] = ProfileJson(profile);
  if (best) {
    const BestRatio b = BestMinRatio(inst, profile, g.Limits());
    r["best_min_ratio"] = {{"ratio", Num(b.ratio)}, {"allocation", AllocationJson(b.allocation)}};
  }
  r["wall_time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  Emit(g, r, out);
  return kExitOk;
}

// ---------------------------------------------------------------- allocate

struct AllocateOpts {
  std::string path;
  std::string algo = "sdq-efx";
  std::string order;
  std::optional<int> anchor;
  std::string out_path;
};

int CmdAllocate(const Globals& g, const AllocateOpts& o,
                const std::vector<std::string>& args, std::ostream& out) {
  const auto start = Clock::now();
  if (std::find(kAlgorithms.begin(), kAlgorithms.end(), o.algo) == kAlgorithms.end()) {
    throw InputError("unknown algorithm '" + o.algo + "'");
  }
  const Instance inst = LoadInstance(o.path);
  if (o.algo == "two-submod-23" && inst.n != 2) {
    throw PreconditionError("two-submod-23 needs exactly two agents (n = " +
                            std::to_string(inst.n) + ")");
  }
  const PickOrder order =
      o.order.empty() ? PickOrder::Identity(inst.n) : PickOrder::Parse(o.order, inst.n);
  ordered_json r = ReportHeader("allocate", args);
  r["instance"] = InstanceInfo(inst);

  std::optional<MmsProfile> profile;
  try {
    profile = MmsAll(inst, g.Limits());
  } catch (const ResourceError& e) {
    const bool needs = o.algo != "sdq-efx" && o.algo != "few-items";
    if (needs) throw;
    r["mms_note"] = std::string("shares not computed: ") + e.what();
  }
  AllocatorTrace trace;
  bool violated = false;
  try {
    trace = RunAlgorithm(o.algo, inst, profile ? &*profile : nullptr, order, o.anchor);
  } catch (const AllocatorInvariantError& e) {
    trace = e.trace();
    r["invariant_violation"] = e.what();
    violated = true;
  }
  r["trace"] = TraceJson(trace);
  r["allocation"] = AllocationJson(trace.allocation);
  if (profile) {
    r["mms"] = ProfileJson(*profile);
    const RatioAudit audit = AlphaMmsAudit(inst, trace.allocation, *profile);
    r["ratios"] = RatioJson(audit);
    const double bound = Bound(o.algo);
    r["ratio_bound"] = bound;
    if (audit.min_ratio < bound - inst.tolerance) violated = true;
  }
  const FairnessReport efx = IsEfx(inst, trace.allocation);
  r["efx"] = FairnessJson(efx);
  if (!o.out_path.empty()) {
    SaveAllocation(trace.allocation, o.out_path, inst.tolerance);
    r["allocation_file"] = o.out_path;
  }
  r["ok"] = !violated;
  r["wall_time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  Emit(g, r, out);
  return violated ? kExitViolation : kExitOk;
}

// ------------------------------------------------------------------- audit

int CmdAudit(const Globals& g, const std::string& inst_path, const std::string& alloc_path,
             const std::string& checks_text, double alpha,
             const std::vector<std::string>& args, std::ostream& out) {
  const Instance inst = LoadInstance(inst_path);
  const AllocationFile file = LoadAllocation(alloc_path);
  RequireValidAllocation(inst, file.allocation);
  ordered_json r = ReportHeader("audit", args);
  r["instance"] = InstanceInfo(inst);
  r["allocation"] = AllocationJson(file.allocation);
  bool violated = false;
  ordered_json results = ordered_json::object();
  for (const std::string& check : SplitList(checks_text)) {
    if (check == "efx") {
      const auto rep = IsEfx(inst, file.allocation);
      results["efx"] = FairnessJson(rep);
      violated |= !rep.holds;
    } else if (check == "ef1") {
      const auto rep = IsEf1(inst, file.allocation);
      results["ef1"] = FairnessJson(rep);
      violated |= !rep.holds;
    } else if (check == "ef") {
      const auto rep = IsEnvyFree(inst, file.allocation);
      results["ef"] = FairnessJson(rep);
      violated |= !rep.holds;
    } else if (check == "po") {
      const auto rep = IsParetoOptimal(inst, file.allocation, g.Limits());
      results["po"] = FairnessJson(rep);
      violated |= !rep.holds;
    } else if (check == "mms") {
      const MmsProfile profile = MmsAll(inst, g.Limits());
      const RatioAudit audit = AlphaMmsAudit(inst, file.allocation, profile);
      ordered_json mj = RatioJson(audit);
      mj["mu"] = profile.mu;
      mj["alpha"] = alpha;
      const bool holds = audit.min_ratio >= alpha - inst.tolerance;
      mj["holds"] = holds;
      results["mms"] = mj;
      violated |= !holds;
    } else {
      throw InputError("unknown check '" + check + "' (expected efx, ef1, ef, po, mms)");
    }
  }
  r["checks"] = results;
  r["ok"] = !violated;
  Emit(g, r, out);
  return violated ? kExitViolation : kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchOpts {
  std::string cls;
  std::string family = "mixed";
  int n = 2;
  int m = 4;
  int trials = 10;
  uint64_t seed = 1;
  std::string csv;
  int jobs = 0;
};

struct TrialResult {
  uint64_t seed = 0;
  std::vector<std::string> algorithms;
  std::vector<double> min_ratio;
  std::vector<bool> efx;
  std::vector<bool> violation;
  std::vector<std::string> branch;
  std::string error;
  ErrorKind error_kind = ErrorKind::kInput;
};

std::vector<std::string> BenchAlgorithms(GeneratorClass cls, int n, int m) {
  std::vector<std::string> out;
  const bool leveled = cls != GeneratorClass::kSubmodular;
  if (leveled) out.push_back("sdq-efx");
  if (leveled && m < 2 * n) out.push_back("few-items");
  if (cls == GeneratorClass::kSubmodularLeveled) out.push_back("submod-23");
  if ((cls == GeneratorClass::kSubmodular || cls == GeneratorClass::kSubmodularLeveled ||
       cls == GeneratorClass::kAdditiveLeveled) &&
      n == 2) {
    out.push_back("two-submod-23");
  }
  if (cls != GeneratorClass::kSubmodular && cls != GeneratorClass::kTableLeveled) {
    out.push_back("subadd-half");
  }
  return out;
}

// Ratio bound sdq-efx must meet; only additive-leveled inputs carry one.
double SdqBound(GeneratorClass cls, int n, int m) {
  if (cls != GeneratorClass::kAdditiveLeveled) return 0.0;
  const int k = m / n;
  if (k == 0) return 0.0;
  return std::max(kTwoThirds, (k - 1.0) / k);
}

TrialResult RunTrial(const BenchOpts& o, GeneratorClass cls, uint64_t seed,
                     const SearchLimits& limits) {
  TrialResult t;
  t.seed = seed;
  try {
    GeneratorConfig cfg;
    cfg.cls = cls;
    cfg.n = o.n;
    cfg.m = o.m;
    cfg.seed = seed;
    cfg.family = o.family;
    const Instance inst = Generate(cfg);
    const MmsProfile profile = MmsAll(inst, limits);
    const PickOrder order = PickOrder::Identity(inst.n);
    for (const std::string& algo : BenchAlgorithms(cls, o.n, o.m)) {
      AllocatorTrace trace;
      bool invariant_failed = false;
      try {
        trace = RunAlgorithm(algo, inst, &profile, order, std::nullopt);
      } catch (const AllocatorInvariantError& e) {
        trace = e.trace();
        invariant_failed = true;
      }
      const RatioAudit audit = AlphaMmsAudit(inst, trace.allocation, profile);
      const bool efx = IsEfx(inst, trace.allocation).holds;
      double bound = Bound(algo);
      if (algo == "sdq-efx") bound = SdqBound(cls, o.n, o.m);
      bool violation = invariant_failed || audit.min_ratio < bound - inst.tolerance;
      if (algo == "sdq-efx" && !efx) violation = true;
      t.algorithms.push_back(algo);
      t.min_ratio.push_back(audit.min_ratio);
      t.efx.push_back(efx);
      t.violation.push_back(violation);
      t.branch.push_back(trace.branch);
    }
  } catch (const Error& e) {
    t.error = e.what();
    t.error_kind = e.kind();
  }
  return t;
}

int CmdBench(const Globals& g, const BenchOpts& o, const std::vector<std::string>& args,
             std::ostream& out) {
  const auto start = Clock::now();
  const GeneratorClass cls = ParseGeneratorClass(o.cls);
  if (o.trials < 0) throw InputError("--trials must be non-negative");
  if (o.n < 1 || o.m < 0) throw InputError("--n must be >= 1 and --m >= 0");
  const SearchLimits limits = g.Limits();
  std::vector<TrialResult> results(o.trials);
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(1, o.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < o.trials; t = next++) {
      results[t] = RunTrial(o, cls, o.seed + static_cast<uint64_t>(t), limits);
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Aggregation runs in trial order, so results do not depend on scheduling.
  for (const TrialResult& t : results) {
    if (!t.error.empty()) {
      throw Error(t.error_kind, "trial seed " + std::to_string(t.seed) + ": " + t.error);
    }
  }
  struct Agg {
    int trials = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    int finite = 0;
    int violations = 0;
    int efx_failures = 0;
    std::optional<uint64_t> worst_seed;
    std::map<std::string, int> branches;
  };
  std::vector<std::string> algos = BenchAlgorithms(cls, o.n, o.m);
  std::map<std::string, Agg> agg;
  for (const TrialResult& t : results) {
    for (size_t k = 0; k < t.algorithms.size(); ++k) {
      Agg& a = agg[t.algorithms[k]];
      ++a.trials;
      const double ratio = t.min_ratio[k];
      if (std::isfinite(ratio)) {
        a.sum += ratio;
        ++a.finite;
      }
      if (!a.worst_seed || ratio < a.min_ratio) {
        a.min_ratio = ratio;
        a.worst_seed = t.seed;
      }
      a.violations += t.violation[k];
      a.efx_failures += !t.efx[k];
      ++a.branches[t.branch[k]];
    }
  }
  ordered_json r = ReportHeader("bench", args);
  r["config"] = {{"class", o.cls}, {"family", o.family}, {"n", o.n},         {"m", o.m},
                 {"trials", o.trials}, {"seed", o.seed},   {"rng", kRngAlgorithm}};
  ordered_json per_algo = ordered_json::object();
  int total_violations = 0;
  if (o.trials > 0) {
    for (const std::string& algo : algos) {
      const Agg& a = agg[algo];
      total_violations += a.violations;
      ordered_json aj;
      aj["trials"] = a.trials;
      aj["min_ratio"] = Num(a.min_ratio);
      aj["mean_ratio"] = a.finite ? Num(a.sum / a.finite) : ordered_json(nullptr);
      aj["violations"] = a.violations;
      aj["efx_failures"] = a.efx_failures;
      if (a.worst_seed) aj["worst_seed"] = *a.worst_seed;
      aj["branches"] = a.branches;
      per_algo[algo] = aj;
    }
  }
  r["algorithms"] = per_algo;
  r["violations"] = total_violations;
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw InputError("cannot write " + o.csv);
    csv << "trial,seed,algorithm,branch,min_ratio,efx,violation\n";
    csv.precision(17);
    for (size_t t = 0; t < results.size(); ++t) {
      const TrialResult& tr = results[t];
      for (size_t k = 0; k < tr.algorithms.size(); ++k) {
        csv << t << "," << tr.seed << "," << tr.algorithms[k] << ",\"" << tr.branch[k]
            << "\"," << tr.min_ratio[k] << "," << tr.efx[k] << "," << tr.violation[k]
            << "\n";
      }
    }
    r["csv"] = o.csv;
  }
  r["wall_time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  Emit(g, r, out);
  return total_violations ? kExitViolation : kExitOk;
}

// ----------------------------------------------------------------- builtin

int CmdBuiltin(const Globals& g, const std::string& name, int n, std::optional<double> eps,
               std::optional<double> delta, int copies, const std::string& out_path,
               const std::vector<std::string>& args, std::ostream& out) {
  const Instance inst = BuiltinByName(name, n, eps, delta, copies);
  if (out_path.empty()) {
    out << InstanceToJson(inst);
    return kExitOk;
  }
  SaveInstance(inst, out_path);
  ordered_json r = ReportHeader("builtin", args);
  r["instance"] = InstanceInfo(inst);
  r["file"] = out_path;
  Emit(g, r, out);
  return kExitOk;
}

// -------------------------------------------------------------------- mech

ordered_json AuditJson(const AuditOutcome& a) {
  ordered_json j;
  j["holds"] = a.holds;
  j["skipped"] = a.skipped;
  if (!a.note.empty()) j["note"] = a.note;
  j["cases_checked"] = a.cases_checked;
  if (!a.violations.empty()) {
    ordered_json v = ordered_json::array();
    for (size_t k = 0; k < a.violations.size() && k < 10; ++k) {
      v.push_back(a.violations[k].ToString());
    }
    j["violations"] = v;
    j["violation_count"] = a.violations.size();
  }
  return j;
}

int CmdMech(const Globals& g, const std::string& path, const std::string& quotas_text,
            const std::string& order_text, const std::string& audits_text,
            const std::vector<std::string>& args, std::ostream& out) {
  const Instance inst = LoadInstance(path);
  Sdq sdq{order_text.empty() ? PickOrder::Identity(inst.n)
                             : PickOrder::Parse(order_text, inst.n),
          quotas_text == "balanced" ? BalancedQuotas(inst.n, inst.m)
                                    : ParseQuotas(quotas_text)};
  if (static_cast<int>(sdq.quotas.size()) != inst.n) {
    throw InputError("expected " + std::to_string(inst.n) + " quotas, got " +
                     std::to_string(sdq.quotas.size()));
  }
  const Allocation outcome = RunSdq(inst, sdq);
  ordered_json r = ReportHeader("mech", args);
  r["instance"] = InstanceInfo(inst);
  r["quotas"] = sdq.quotas;
  r["order"] = sdq.order.sigma();
  r["allocation"] = AllocationJson(outcome);
  bool violated = false;
  ordered_json audits = ordered_json::object();
  const Mechanism mech = SdqMechanism(sdq);
  auto strategies = [&]() -> std::optional<StrategySet> {
    for (const auto& v : inst.valuations) {
      if (v.additive() == nullptr) return std::nullopt;
    }
    return PermutationStrategies(inst);
  };
  for (const std::string& audit : SplitList(audits_text)) {
    if (audit == "truthful" || audit == "nonbossy") {
      const auto s = strategies();
      if (!s) {
        AuditOutcome skipped{.property = audit, .skipped = true,
                             .note = "permutation misreports need additive valuations"};
        audits[audit] = AuditJson(skipped);
        continue;
      }
      const AuditOutcome a = audit == "truthful" ? TruthfulnessAudit(inst, mech, *s)
                                                 : NonBossinessAudit(inst, mech, *s);
      audits[audit] = AuditJson(a);
      violated |= !a.holds;
    } else if (audit == "neutral") {
      const AuditOutcome a = NeutralityAudit(inst, sdq, AllPermutations(inst.m));
      audits[audit] = AuditJson(a);
      violated |= !a.holds;
    } else if (audit == "charact") {
      const CharacterizationReport c = CharacterizationCheck(inst, sdq);
      ordered_json cj;
      cj["quotas_guarantee_efx"] = c.quotas_guarantee_efx;
      cj["input_leveled"] = c.input_leveled;
      cj["efx_on_input"] = FairnessJson(c.efx_on_input);
      if (c.efx_on_witness) cj["efx_on_witness"] = FairnessJson(*c.efx_on_witness);
      if (c.witness) cj["witness_digest"] = InstanceDigest(*c.witness);
      cj["consistent"] = c.consistent;
      audits[audit] = cj;
      violated |= !c.efx_on_input.holds || !c.consistent;
    } else {
      throw InputError("unknown audit '" + audit +
                       "' (expected truthful, nonbossy, neutral, charact)");
    }
  }
  r["audits"] = audits;
  r["ok"] = !violated;
  Emit(g, r, out);
  return violated ? kExitViolation : kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResource: return kExitResource;
    case ErrorKind::kInvariantViolation: return kExitViolation;
    default: return kExitInput;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair division toolkit for leveled valuations", "mmslab"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit machine-readable JSON reports");
  app.add_option("--max-states", g.max_states,
                 "Cap on searched partitions/allocations (default 5e7 or MMSLAB_MAX_STATES)");
  app.add_option("--po-max-goods", g.po_max_goods, "Pareto audit cap on m (default 10)");
  app.add_option("--po-max-agents", g.po_max_agents, "Pareto audit cap on n (default 3)");
  app.add_option("--leveled-cap", g.leveled_cap, "Validator cap on m for leveled and simpler checks (default 16)");
  app.add_option("--submodular-cap", g.submodular_cap, "Validator cap on m for submodular/subadditive checks (default 14)");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Classify every agent's valuation");
  validate->add_option("instance", path, "Instance file")->required();

  bool best = false;
  auto* mms = app.add_subcommand("mms", "Compute maximin shares and witnesses");
  mms->add_option("instance", path, "Instance file")->required();
  mms->add_flag("--best", best, "Also search for the best achievable MMS ratio");

  AllocateOpts ao;
  auto* allocate = app.add_subcommand("allocate", "Run an allocation algorithm");
  allocate->add_option("instance", ao.path, "Instance file")->required();
  allocate->add_option("--algo", ao.algo, "sdq-efx | few-items | submod-23 | two-submod-23 | subadd-half");
  allocate->add_option("--order", ao.order, "Picking order, e.g. 2,0,1");
  allocate->add_option("--anchor", ao.anchor, "Anchor agent for subadd-half");
  allocate->add_option("--out", ao.out_path, "Write the allocation file here");

  std::string alloc_path;
  std::string checks = "efx,ef1,mms";
  double alpha = 1.0;
  auto* audit = app.add_subcommand("audit", "Audit an allocation");
  audit->add_option("instance", path, "Instance file")->required();
  audit->add_option("allocation", alloc_path, "Allocation file")->required();
  audit->add_option("--checks", checks, "Comma list of efx, ef1, ef, po, mms");
  audit->add_option("--alpha", alpha, "MMS fraction required by the mms check");

  BenchOpts bo;
  auto* bench = app.add_subcommand("bench", "Run algorithms on generated instances");
  bench->add_option("--class", bo.cls, "Generator class")->required();
  bench->add_option("--family", bo.family, "Generator family");
  bench->add_option("--n", bo.n, "Agents");
  bench->add_option("--m", bo.m, "Goods");
  bench->add_option("--trials", bo.trials, "Number of trials");
  bench->add_option("--seed", bo.seed, "Seed of trial 0; trial t uses seed + t");
  bench->add_option("--csv", bo.csv, "Write per-trial rows here");
  bench->add_option("--jobs", bo.jobs, "Worker threads (default: hardware)");

  std::string name;
  int bn = 2;
  std::optional<double> eps, delta;
  int copies = 0;
  std::string out_path;
  auto* builtin = app.add_subcommand("builtin", "Write a built-in instance");
  builtin->add_option("--name", name, "unbounded-leveled | xos-upper")->required();
  builtin->add_option("--n", bn, "Agents (unbounded-leveled)");
  builtin->add_option("--eps", eps, "Epsilon");
  builtin->add_option("--delta", delta, "Delta (unbounded-leveled)");
  builtin->add_option("--copies", copies, "Extra type-1 agents (xos-upper)");
  builtin->add_option("--out", out_path, "Output file (default: stdout)");

  std::string quotas = "balanced";
  std::string order;
  std::string audits = "truthful,nonbossy,neutral,charact";
  auto* mech = app.add_subcommand("mech", "Audit serial dictatorship with quotas");
  mech->add_option("instance", path, "Instance file")->required();
  mech->add_option("--quotas", quotas, "balanced or a list such as 3,1");
  mech->add_option("--order", order, "Picking order");
  mech->add_option("--audit", audits, "Comma list of truthful, nonbossy, neutral, charact");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*validate) return CmdValidate(g, path, args, out);
    if (*mms) return CmdMms(g, path, best, args, out);
    if (*allocate) return CmdAllocate(g, ao, args, out);
    if (*audit) return CmdAudit(g, path, alloc_path, checks, alpha, args, out);
    if (*bench) return CmdBench(g, bo, args, out);
    if (*builtin) return CmdBuiltin(g, name, bn, eps, delta, copies, out_path, args, out);
    if (*mech) return CmdMech(g, path, quotas, order, audits, args, out);
  } catch (const Error& e) {
    err << ErrorKindName(e.kind()) << " error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace mmslab
