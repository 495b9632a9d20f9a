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
// Generators, builtins and the JSON file formats.

#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "mmslab/builtin.h"
#include "mmslab/classify.h"
#include "mmslab/errors.h"
#include "mmslab/generators.h"
#include "mmslab/random.h"
#include "mmslab/serialization.h"

namespace mmslab {
namespace {

GeneratorConfig Config(GeneratorClass cls, int n, int m, uint64_t seed,
                       const char* family = "mixed") {
  GeneratorConfig cfg;
  cfg.cls = cls;
  cfg.n = n;
  cfg.m = m;
  cfg.seed = seed;
  cfg.family = family;
  return cfg;
}

TEST(GeneratorTest, DeterministicPerSeed) {
  for (GeneratorClass cls : AllGeneratorClasses()) {
    const Instance a = Generate(Config(cls, 3, 6, 17));
    const Instance b = Generate(Config(cls, 3, 6, 17));
    const Instance c = Generate(Config(cls, 3, 6, 18));
    EXPECT_EQ(a, b) << GeneratorClassName(cls);
    EXPECT_NE(a.valuations, c.valuations) << GeneratorClassName(cls);
    EXPECT_EQ(a.provenance.rng_algorithm, kRngAlgorithm);
    EXPECT_EQ(a.provenance.seed, 17u);
    EXPECT_EQ(a.provenance.source.rfind("generator:", 0), 0u);
  }
}

TEST(GeneratorTest, DeclaredClassesHold) {
  for (GeneratorClass cls : AllGeneratorClasses()) {
    for (uint64_t seed = 0; seed < 8; ++seed) {
      const Instance inst = Generate(Config(cls, 2 + seed % 2, 1 + seed, seed));
      ASSERT_EQ(inst.declared_classes.size(), static_cast<size_t>(inst.n));
      for (const AgentClassification& ac : ClassifyAll(inst)) {
        EXPECT_TRUE(ac.mismatches.empty())
            << GeneratorClassName(cls) << " seed " << seed << ": " << ac.mismatches[0];
        EXPECT_TRUE(ac.Find("monotone")->holds);
        EXPECT_TRUE(ac.Find("normalized")->holds);
      }
    }
  }
}

TEST(GeneratorTest, FamiliesAndParameters) {
  for (const char* family : {"size-anchored", "coverage", "clustered", "mixed"}) {
    const Instance inst =
        Generate(Config(GeneratorClass::kSubmodularLeveled, 2, 5, 3, family));
    EXPECT_NE(inst.provenance.source.find(family), std::string::npos);
  }
  EXPECT_THROW(Generate(Config(GeneratorClass::kSubmodularLeveled, 2, 5, 3, "nope")),
               InputError);
  GeneratorConfig bad = Config(GeneratorClass::kAdditiveLeveled, 2, 5, 3);
  bad.params["spread"] = 2.0;
  EXPECT_THROW(Generate(bad), InputError);
  EXPECT_THROW(Generate(Config(GeneratorClass::kTableLeveled, 2, 17, 0)), ResourceError);
  EXPECT_EQ(Generate(Config(GeneratorClass::kSubmodularLeveled, 2, 40, 0)).m, 40);
  EXPECT_THROW(ParseGeneratorClass("modular"), InputError);
  EXPECT_EQ(ParseGeneratorClass("table-leveled"), GeneratorClass::kTableLeveled);
}

TEST(RngTest, ConversionsStayInRange) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.Uniform01();
    const double o = rng.UniformOpen();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_GT(o, 0.0);
    EXPECT_LT(o, 1.0);
    const int b = rng.Between(2, 4);
    EXPECT_GE(b, 2);
    EXPECT_LE(b, 4);
  }
}

TEST(BuiltinTest, ShapesAndErrors) {
  const Instance gap = BuiltinUnboundedLeveled(4);
  EXPECT_EQ(gap.n, 4);
  EXPECT_EQ(gap.m, 8);
  EXPECT_EQ(gap.provenance.source, "builtin:unbounded-leveled");
  EXPECT_THROW(BuiltinUnboundedLeveled(1), InputError);
  EXPECT_THROW(BuiltinUnboundedLeveled(2, 0.6, 0.5), InputError);
  EXPECT_THROW(BuiltinUnboundedLeveled(2, 0.0, 0.1), InputError);
  const Instance xos = BuiltinXosUpper(0.01, 2);
  EXPECT_EQ(xos.n, 4);
  EXPECT_EQ(xos.m, 4);
  EXPECT_THROW(BuiltinXosUpper(1.0), InputError);
  EXPECT_THROW(BuiltinByName("nope", 2, std::nullopt, std::nullopt, 0), InputError);
  EXPECT_EQ(BuiltinByName("xos-upper", 2, 0.01, std::nullopt, 0), BuiltinXosUpper(0.01));
}

TEST(SerializationTest, RoundTripsAreBitIdentical) {
  std::vector<Instance> all = {BuiltinXosUpper(0.01), BuiltinUnboundedLeveled(3)};
  for (GeneratorClass cls : AllGeneratorClasses()) {
    all.push_back(Generate(Config(cls, 3, 5, 9)));
  }
  const std::string path =
      (std::filesystem::temp_directory_path() / "mmslab_roundtrip.json").string();
  for (const Instance& inst : all) {
    const std::string text = InstanceToJson(inst);
    const Instance back = InstanceFromJson(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(InstanceToJson(back), text);
    SaveInstance(inst, path);
    EXPECT_EQ(LoadInstance(path), inst);
    EXPECT_EQ(InstanceDigest(back), InstanceDigest(inst));
  }
  std::remove(path.c_str());
}

TEST(SerializationTest, ErrorsNameTheField) {
  auto message = [](const std::string& text) -> std::string {
    try {
      InstanceFromJson(text);
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("{").find("malformed JSON"), std::string::npos);
  EXPECT_NE(message(R"({"version":1,"n":1,"m":1,"valuations":[{"kind":"table",)"
                    R"("values":{"":0}}]})")
                .find("valuations[0].values: missing key \"0\""),
            std::string::npos);
  EXPECT_NE(message(R"({"version":1,"n":1,"m":2,"valuations":[{"kind":"additive",)"
                    R"("values":[1,-1]}]})")
                .find("valuations[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"version":1,"n":1,"m":1,"valuations":[{"kind":"magic"}]})")
                .find("valuations[0].kind"),
            std::string::npos);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), InputError);
}

TEST(SerializationTest, AllocationFiles) {
  Allocation a(2);
  a[0] = Bundle::FromIndices({0, 2});
  a[1] = Bundle::FromIndices({1});
  const AllocationFile back = AllocationFromJson(AllocationToJson(a, 1e-6));
  EXPECT_EQ(back.allocation, a);
  EXPECT_DOUBLE_EQ(back.tolerance, 1e-6);
  EXPECT_THROW(AllocationFromJson(R"({"bundles":[[0],[0]]})"), InputError);
  EXPECT_THROW(AllocationFromJson(R"({"bundles":[[0,0]]})"), InputError);
}

}  // namespace
}  // namespace mmslab
