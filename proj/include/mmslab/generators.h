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
// Seeded random instance generators, one per valuation class. Every
// generated valuation is checked against its class validators when m is
// within the classifier caps; a valuation failing them is redrawn, and
// exhausting the retries raises InvariantViolationError.

#ifndef MMSLAB_GENERATORS_H_
#define MMSLAB_GENERATORS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mmslab/instance.h"

namespace mmslab {

enum class GeneratorClass {
  kAdditiveLeveled,
  kSubmodularLeveled,
  kSubadditiveLeveled,
  kSubmodular,
  kTableLeveled,
};

// "additive-leveled", "submodular-leveled", ...
const char* GeneratorClassName(GeneratorClass cls);
GeneratorClass ParseGeneratorClass(const std::string& text);
std::vector<GeneratorClass> AllGeneratorClasses();

// Parameters (all optional):
//   spread    additive-leveled: values in (1, 1 + spread/m); 0 < spread <= 1
//   scale     submodular-leveled size-anchored: fraction of the smallest
//             base increment spent on the additive part, in [0, 1)
//   delta     subadditive-leveled: fraction of the largest safe noise, (0, 1)
//
// Families:
//   submodular-leveled  "size-anchored", "coverage", "clustered",
//                       "mixed" (default)
//   submodular          "coverage", "clustered", "mixed" (default)
//   subadditive-leveled "sqrt", "tiered", "mixed" (default)
//   other classes       "default" only
struct GeneratorConfig {
  GeneratorClass cls = GeneratorClass::kAdditiveLeveled;
  int n = 2;
  int m = 4;
  uint64_t seed = 0;
  std::string family = "mixed";
  std::map<std::string, double> params;
};

// Largest m each class accepts.
int MaxGoodsFor(GeneratorClass cls);

Instance Generate(const GeneratorConfig& cfg);

Instance GenAdditiveLeveled(const GeneratorConfig& cfg);
Instance GenSubmodularLeveled(const GeneratorConfig& cfg);
Instance GenSubadditiveLeveled(const GeneratorConfig& cfg);
Instance GenSubmodular(const GeneratorConfig& cfg);
Instance GenTableLeveled(const GeneratorConfig& cfg);

}  // namespace mmslab

#endif  // MMSLAB_GENERATORS_H_
