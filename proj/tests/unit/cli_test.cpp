// Copyright 2026 The csmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csmetric/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace csm::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, Environment env = {}) {
  args.insert(args.begin(), "csmetric");
  std::ostringstream out, err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

TEST(CliTest, SolvePoly) {
  auto r = invoke({"solve-poly", "--m", "3", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = json_of(r);
  EXPECT_EQ(j["schema"], "csmetric/1");
  EXPECT_NEAR(j["root"].get<double>(), 0.012345679299142365, 1e-12);
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST(CliTest, ExitCodeMatrix) {
  EXPECT_EQ(invoke({"verify-space", "--builtin", "app_metric"}).code, kOk);
  EXPECT_EQ(invoke({"verify-space", "--builtin", "squared_diff", "--alpha", "identity"}).code,
            kFailed);
  EXPECT_EQ(invoke({"verify-thm41", "--m", "3"}).code, kOk);
  EXPECT_EQ(invoke({"verify-thm41", "--m", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"solve-poly", "--m", "3", "--x0", "1.5"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"verify-space"}).code, kUsage);
  EXPECT_EQ(invoke({"verify-space", "--builtin", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({"verify-space", "--builtin", "app_metric", "--output", "xml"}).code,
            kUsage);
  EXPECT_EQ(invoke({"check-contraction", "--builtin", "app_metric", "--map", "poly:3",
                    "--r", "0.0124"}).code,
            kOk);
  EXPECT_EQ(invoke({"check-contraction", "--builtin", "app_metric", "--map", "poly:3",
                    "--r", "0.0001"}).code,
            kFailed);
  EXPECT_EQ(invoke({"iterate", "--builtin", "app_metric", "--map", "scale:0.5",
                    "--x0", "1"}).code,
            kOk);
  EXPECT_EQ(invoke({"iterate", "--builtin", "app_metric", "--map", "scale:2",
                    "--x0", "0.75"}).code,
            kFailed);
  EXPECT_EQ(invoke({"iterate", "--builtin", "app_metric", "--map", "reflect",
                    "--x0", "0", "--max-iter", "20"}).code,
            kFailed);
}

TEST(CliTest, MalformedSpaceJsonIsUsageError) {
  auto r = invoke({"verify-space", "--space", "{\"metric\":"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(invoke({"verify-space", "--space", "{\"alpha\":{}}"}).code, kUsage);
  EXPECT_EQ(invoke({"verify-space", "--space-file", "/nonexistent/space.json"}).code,
            kUsage);
}

TEST(CliTest, SpaceFile) {
  const std::string path = ::testing::TempDir() + "csmetric_space.json";
  {
    std::ofstream f(path);
    f << R"({"metric":"app_metric","map":{"id":"scale","params":[0.25]}})";
  }
  auto r = invoke({"iterate", "--space-file", path, "--x0", "1", "--output", "json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(json_of(r)["result"]["converged"].get<bool>());
  std::remove(path.c_str());
}

TEST(CliTest, JsonOutputIsByteIdentical) {
  const std::vector<std::string> args = {"verify-thm41", "--m", "3", "--output", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> vs = {"verify-space", "--builtin", "abs_sum",
                                       "--strategy", "uniform_random", "--output", "json"};
  EXPECT_EQ(invoke(vs).out, invoke(vs).out);
}

TEST(CliTest, SeedEnvironmentOverride) {
  const std::vector<std::string> args = {"verify-space", "--builtin", "abs_sum",
                                         "--seed", "1", "--output", "json"};
  auto plain = json_of(invoke(args));
  EXPECT_EQ(plain["sampling"]["seed"], 1);
  auto over = json_of(invoke(args, Environment{"77"}));
  EXPECT_EQ(over["sampling"]["seed"], 77);
  EXPECT_EQ(invoke(args, Environment{"abc"}).code, kUsage);
}

TEST(CliTest, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "csmetric_out.json";
  auto a = invoke({"solve-poly", "--m", "4", "--output", "json"});
  auto b = invoke({"solve-poly", "--m", "4", "--output", "json", "--out", path});
  ASSERT_EQ(b.code, kOk);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), a.out);
  std::remove(path.c_str());
}

TEST(CliTest, TextRenderer) {
  Json j;
  j["schema"] = "csmetric/1";
  j["list"] = Json::array({1.5, 2});
  j["nested"]["ok"] = true;
  const std::string text = render_text(j);
  EXPECT_NE(text.find("schema: csmetric/1"), std::string::npos);
  EXPECT_NE(text.find("nested:\n  ok: true"), std::string::npos);
}

TEST(CliTest, Help) {
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify-thm41"), std::string::npos);
}

}  // namespace
}  // namespace csm::cli
