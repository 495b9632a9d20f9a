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

#include "mmslab/serialization.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mmslab/errors.h"

namespace mmslab {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& Field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) Fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

int Integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const auto x = j.get<int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) Fail(path, "integer out of range");
  return static_cast<int>(x);
}

std::vector<double> Numbers(const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k) {
    out.push_back(Number(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write to " + path + " failed");
}

json ValuationToJson(const Valuation& v) {
  json j;
  if (const auto* a = v.additive()) {
    j["kind"] = "additive";
    j["values"] = a->values;
  } else if (const auto* t = v.table()) {
    j["kind"] = "table";
    json values = json::object();
    for (uint64_t mask = 0; mask < t->values.size(); ++mask) {
      values[TableKey(Bundle::FromMask(mask))] = t->values[mask];
    }
    j["values"] = std::move(values);
  } else if (const auto* x = v.xos()) {
    j["kind"] = "xos";
    j["clauses"] = x->clauses;
  } else if (const auto* s = v.size_anchored()) {
    j["kind"] = "size_anchored";
    j["base"] = s->base;
    j["deltas"] = s->deltas;
    j["scale"] = s->scale;
  }
  return j;
}

Bundle ParseTableKey(const std::string& key, int m, const std::string& path) {
  if (key.empty()) return Bundle();
  std::vector<int> goods;
  std::stringstream ss(key);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 2) {
      Fail(path, "malformed bundle key \"" + key + "\"");
    }
    const int g = std::stoi(token);
    if (g >= m) Fail(path, "bundle key \"" + key + "\" names a good >= m");
    if (!goods.empty() && g <= goods.back()) {
      Fail(path, "bundle key \"" + key + "\" is not strictly increasing");
    }
    goods.push_back(g);
  }
  if (key.back() == ',') Fail(path, "malformed bundle key \"" + key + "\"");
  return Bundle::FromIndices(goods);
}

Valuation ValuationFromJson(const json& j, int m, const std::string& path) {
  const json& kind_field = Field(j, path, "kind");
  if (!kind_field.is_string()) Fail(path + ".kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "additive") {
      return Valuation::Additive(Numbers(Field(j, path, "values"), path + ".values"));
    }
    if (kind == "table") {
      const std::string vpath = path + ".values";
      const json& values = Field(j, path, "values");
      if (!values.is_object()) Fail(vpath, "expected an object keyed by bundle");
      if (m > kMaxTableGoods) {
        throw ResourceError(vpath + ": table valuations support m <= " +
                            std::to_string(kMaxTableGoods));
      }
      const uint64_t full = uint64_t{1} << m;
      std::vector<double> table(full, 0.0);
      std::vector<bool> seen(full, false);
      for (const auto& [key, value] : values.items()) {
        const Bundle b = ParseTableKey(key, m, vpath);
        seen[b.mask()] = true;
        table[b.mask()] = Number(value, vpath + "[\"" + key + "\"]");
      }
      for (uint64_t mask = 0; mask < full; ++mask) {
        if (!seen[mask]) {
          Fail(vpath, "missing key \"" + TableKey(Bundle::FromMask(mask)) + "\"");
        }
      }
      return Valuation::Table(std::move(table));
    }
    if (kind == "xos") {
      const std::string cpath = path + ".clauses";
      const json& clauses = Field(j, path, "clauses");
      if (!clauses.is_array()) Fail(cpath, "expected an array of clauses");
      std::vector<std::vector<double>> out;
      for (size_t k = 0; k < clauses.size(); ++k) {
        out.push_back(Numbers(clauses[k], cpath + "[" + std::to_string(k) + "]"));
      }
      return Valuation::Xos(std::move(out));
    }
    if (kind == "size_anchored") {
      return Valuation::SizeAnchored(
          Numbers(Field(j, path, "base"), path + ".base"),
          Numbers(Field(j, path, "deltas"), path + ".deltas"),
          Number(Field(j, path, "scale"), path + ".scale"));
    }
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    Fail(path, msg);
  }
  Fail(path + ".kind", "unknown valuation kind \"" + kind + "\"");
}

}  // namespace

std::string TableKey(Bundle b) {
  std::string out;
  for (int g : b.Indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

std::string InstanceToJson(const Instance& inst) {
  inst.Validate();
  json j;
  j["version"] = kInstanceFormatVersion;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["tolerance"] = inst.tolerance;
  const Provenance& p = inst.provenance;
  if (!p.rng_algorithm.empty() || p.seed) {
    json rng = json::object();
    if (!p.rng_algorithm.empty()) rng["algorithm"] = p.rng_algorithm;
    if (p.seed) rng["seed"] = *p.seed;
    j["rng"] = std::move(rng);
  }
  if (!p.source.empty() || !p.params.empty()) {
    json prov = json::object();
    prov["source"] = p.source;
    prov["params"] = p.params;
    j["provenance"] = std::move(prov);
  }
  if (!inst.declared_classes.empty()) {
    json classes = json::array();
    for (const auto& c : inst.declared_classes) classes.push_back(c.ToString());
    j["declared_classes"] = std::move(classes);
  }
  json vals = json::array();
  for (const auto& v : inst.valuations) vals.push_back(ValuationToJson(v));
  j["valuations"] = std::move(vals);
  return j.dump(1) + "\n";
}

Instance InstanceFromJson(const std::string& text) {
  const json j = Parse(text);
  const std::string root = "instance";
  if (!j.is_object()) Fail(root, "expected an object");
  if (j.contains("version")) {
    const int version = Integer(j["version"], "version");
    if (version != kInstanceFormatVersion) {
      Fail("version", "unsupported format version " + std::to_string(version));
    }
  }
  Instance inst;
  inst.n = Integer(Field(j, root, "n"), "n");
  inst.m = Integer(Field(j, root, "m"), "m");
  if (inst.n < 1) Fail("n", "must be at least 1");
  if (inst.m < 0 || inst.m > kMaxGoods) Fail("m", "out of range");
  if (j.contains("tolerance")) {
    inst.tolerance = Number(j["tolerance"], "tolerance");
    if (!(inst.tolerance >= 0)) Fail("tolerance", "must be non-negative");
  }
  if (j.contains("rng")) {
    const json& rng = j["rng"];
    if (!rng.is_object()) Fail("rng", "expected an object");
    if (rng.contains("algorithm")) {
      if (!rng["algorithm"].is_string()) Fail("rng.algorithm", "expected a string");
      inst.provenance.rng_algorithm = rng["algorithm"].get<std::string>();
    }
    if (rng.contains("seed")) {
      if (!rng["seed"].is_number_unsigned()) {
        Fail("rng.seed", "expected a non-negative integer");
      }
      inst.provenance.seed = rng["seed"].get<uint64_t>();
    }
  }
  if (j.contains("provenance")) {
    const json& prov = j["provenance"];
    if (!prov.is_object()) Fail("provenance", "expected an object");
    if (prov.contains("source")) {
      if (!prov["source"].is_string()) Fail("provenance.source", "expected a string");
      inst.provenance.source = prov["source"].get<std::string>();
    }
    if (prov.contains("params")) {
      const json& params = prov["params"];
      if (!params.is_object()) Fail("provenance.params", "expected an object");
      for (const auto& [key, value] : params.items()) {
        inst.provenance.params[key] = Number(value, "provenance.params." + key);
      }
    }
  }
  if (j.contains("declared_classes")) {
    const json& classes = j["declared_classes"];
    if (!classes.is_array()) Fail("declared_classes", "expected an array");
    for (size_t k = 0; k < classes.size(); ++k) {
      const std::string path = "declared_classes[" + std::to_string(k) + "]";
      if (!classes[k].is_string()) Fail(path, "expected a string");
      try {
        inst.declared_classes.push_back(DeclaredClass::Parse(classes[k].get<std::string>()));
      } catch (const InputError& e) {
        Fail(path, e.what());
      }
    }
  }
  const json& vals = Field(j, root, "valuations");
  if (!vals.is_array()) Fail("valuations", "expected an array");
  for (size_t k = 0; k < vals.size(); ++k) {
    inst.valuations.push_back(
        ValuationFromJson(vals[k], inst.m, "valuations[" + std::to_string(k) + "]"));
  }
  try {
    inst.Validate();
  } catch (const InputError& e) {
    Fail(root, e.what());
  }
  return inst;
}

void SaveInstance(const Instance& inst, const std::string& path) {
  WriteFile(path, InstanceToJson(inst));
}

Instance LoadInstance(const std::string& path) {
  try {
    return InstanceFromJson(ReadFile(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string AllocationToJson(const Allocation& alloc, double tolerance) {
  json j;
  json bundles = json::array();
  for (const Bundle& b : alloc.bundles) bundles.push_back(b.Indices());
  j["bundles"] = std::move(bundles);
  j["tolerance"] = tolerance;
  return j.dump() + "\n";
}

AllocationFile AllocationFromJson(const std::string& text) {
  const json j = Parse(text);
  AllocationFile out;
  const json& bundles = Field(j, "allocation", "bundles");
  if (!bundles.is_array()) Fail("bundles", "expected an array of good lists");
  uint64_t used = 0;
  for (size_t a = 0; a < bundles.size(); ++a) {
    const std::string path = "bundles[" + std::to_string(a) + "]";
    if (!bundles[a].is_array()) Fail(path, "expected an array of goods");
    Bundle b;
    for (size_t k = 0; k < bundles[a].size(); ++k) {
      const int g = Integer(bundles[a][k], path + "[" + std::to_string(k) + "]");
      if (g < 0 || g >= kMaxGoods) Fail(path, "good " + std::to_string(g) + " out of range");
      if (b.Contains(g)) Fail(path, "good " + std::to_string(g) + " listed twice");
      if ((used >> g) & 1u) {
        Fail(path, "good " + std::to_string(g) + " already belongs to another bundle");
      }
      b = b.With(g);
    }
    used |= b.mask();
    out.allocation.bundles.push_back(b);
  }
  if (j.contains("tolerance")) {
    out.tolerance = Number(j["tolerance"], "tolerance");
    if (!(out.tolerance >= 0)) Fail("tolerance", "must be non-negative");
  }
  return out;
}

void SaveAllocation(const Allocation& alloc, const std::string& path, double tolerance) {
  WriteFile(path, AllocationToJson(alloc, tolerance));
}

AllocationFile LoadAllocation(const std::string& path) {
  try {
    return AllocationFromJson(ReadFile(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string InstanceDigest(const Instance& inst) {
  const std::string text = InstanceToJson(inst);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mmslab
