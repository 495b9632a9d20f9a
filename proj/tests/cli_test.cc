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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mmslab/generators.h"
#include "mmslab/serialization.h"

namespace mmslab {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mmslab_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }

  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
};

TEST_F(CliTest, BuiltinValidateAndMms) {
  const std::string xos = Path("xos.json");
  ASSERT_EQ(Cli({"builtin", "--name", "xos-upper", "--eps", "0.01", "--out", xos}).code, 0);
  EXPECT_EQ(Cli({"validate", xos}).code, 0);
  const CliRun mms = Cli({"--json", "mms", xos, "--best"});
  EXPECT_EQ(mms.code, 0);
  EXPECT_NE(mms.out.find("0.505"), std::string::npos);
  const CliRun stdout_builtin = Cli({"builtin", "--name", "unbounded-leveled", "--n", "2"});
  EXPECT_EQ(stdout_builtin.code, 0);
  EXPECT_NE(stdout_builtin.out.find("builtin:unbounded-leveled"), std::string::npos);
}

TEST_F(CliTest, ValidateFlagsDeclaredMismatch) {
  std::string text = InstanceToJson(MakeInstance(
      {Valuation::Additive({3, 1, 1}), Valuation::Additive({1, 1, 1})}, 3));
  // Claim additive-leveled, which fails for agent 0.
  const size_t pos = text.find("\"n\"");
  text.insert(pos, "\"declared_classes\": [\"additive-leveled\", \"additive-leveled\"], ");
  const std::string path = Write("bad.json", text);
  EXPECT_EQ(Cli({"validate", path}).code, 1);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(Cli({"mms", Path("missing.json")}).code, 2);
  EXPECT_EQ(Cli({"mms", Write("broken.json", "{")}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  const std::string three = Path("three.json");
  SaveInstance(MakeInstance({Valuation::Additive({1, 1, 1}), Valuation::Additive({1, 1, 1}),
                             Valuation::Additive({1, 1, 1})}, 3),
               three);
  EXPECT_EQ(Cli({"allocate", three, "--algo", "two-submod-23"}).code, 2);
  EXPECT_EQ(Cli({"allocate", three, "--algo", "no-such-algo"}).code, 2);
  EXPECT_EQ(Cli({"allocate", three, "--algo", "sdq-efx", "--order", "0,0,1"}).code, 2);
}

TEST_F(CliTest, ResourceCapExitsThree) {
  const std::string xos = Path("xos.json");
  ASSERT_EQ(Cli({"builtin", "--name", "xos-upper", "--out", xos}).code, 0);
  EXPECT_EQ(Cli({"--max-states", "1", "mms", xos}).code, 3);
}

TEST_F(CliTest, AllocateAndAudit) {
  GeneratorConfig cfg;
  cfg.cls = GeneratorClass::kSubmodularLeveled;
  cfg.n = 2;
  cfg.m = 5;
  const std::string inst = Path("inst.json");
  SaveInstance(Generate(cfg), inst);
  const std::string alloc = Path("alloc.json");
  EXPECT_EQ(Cli({"allocate", inst, "--algo", "submod-23", "--out", alloc}).code, 0);
  EXPECT_EQ(Cli({"audit", inst, alloc, "--checks", "ef1,mms", "--alpha", "0.66"}).code, 0);
  // Everything to agent 0 fails the share check for agent 1.
  const std::string greedy = Write("greedy.json", R"({"bundles":[[0,1,2,3,4],[]]})");
  EXPECT_EQ(Cli({"audit", inst, greedy, "--checks", "mms", "--alpha", "0.5"}).code, 1);
  const CliRun json = Cli({"--json", "audit", inst, greedy, "--checks", "efx"});
  EXPECT_EQ(json.code, 1);
  EXPECT_NE(json.out.find("\"digest\""), std::string::npos);
}

TEST_F(CliTest, MechanismAudits) {
  GeneratorConfig cfg;
  cfg.cls = GeneratorClass::kAdditiveLeveled;
  cfg.n = 2;
  cfg.m = 4;
  const std::string inst = Path("inst.json");
  SaveInstance(Generate(cfg), inst);
  EXPECT_EQ(Cli({"mech", inst, "--quotas", "balanced", "--audit",
                 "truthful,nonbossy,neutral,charact"}).code,
            0);
  EXPECT_EQ(Cli({"mech", inst, "--quotas", "3,1", "--audit", "charact"}).code, 1);
  EXPECT_EQ(Cli({"mech", inst, "--quotas", "3,x"}).code, 2);
}

TEST_F(CliTest, BenchIsDeterministicAcrossJobs) {
  const std::string a = Path("a.csv");
  const std::string b = Path("b.csv");
  ASSERT_EQ(Cli({"bench", "--class", "submodular-leveled", "--n", "2", "--m", "5",
                 "--trials", "12", "--seed", "4", "--jobs", "1", "--csv", a})
                .code,
            0);
  ASSERT_EQ(Cli({"bench", "--class", "submodular-leveled", "--n", "2", "--m", "5",
                 "--trials", "12", "--seed", "4", "--jobs", "4", "--csv", b})
                .code,
            0);
  EXPECT_FALSE(Read("a.csv").empty());
  EXPECT_EQ(Read("a.csv"), Read("b.csv"));
}

TEST_F(CliTest, BenchWithZeroTrials) {
  const CliRun r = Cli({"bench", "--class", "additive-leveled", "--trials", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Cli({"bench", "--class", "nope"}).code, 2);
}

TEST(ExitCodeTest, Mapping) {
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInput), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kRepresentation), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kPrecondition), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kResource), 3);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInvariantViolation), 1);
}

}  // namespace
}  // namespace mmslab
