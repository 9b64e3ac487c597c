// Copyright 2026 The vogankm Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace vogankm::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

bool Has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliClassifyTest, E10) {
  const Result r = RunCli({"classify", "E10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Has(r.out, "type: Indefinite, hyperbolic")) << r.out;
  EXPECT_TRUE(Has(r.out, "delete 9 -> Affine {0 1 2 3 4 5 6 7 8}")) << r.out;
}

TEST(CliClassifyTest, MatrixFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "vogankm_cli_rank2.json";
  {
    std::ofstream f(path);
    f << R"({"matrix": [[2, -3], [-3, 2]]})";
  }
  const Result r = RunCli({"classify", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Has(r.out, "type: Indefinite, hyperbolic")) << r.out;
}

TEST(CliOrbitsTest, Example2CompareClaims) {
  const Result r = RunCli({"orbits", "Example2-rank4", "--compare-paper"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Has(r.out, "a      Match")) << r.out;
  EXPECT_TRUE(Has(r.out, "b      Match")) << r.out;
  EXPECT_TRUE(Has(r.out, "Borel-de Siebenthal: holds")) << r.out;
}

TEST(CliOrbitsTest, E10CompareClaimsReportsMismatch) {
  const Result r = RunCli({"orbits", "E10", "--compare-paper"});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_TRUE(Has(r.out, "Mismatch")) << r.out;
}

TEST(CliOrbitsTest, JsonOutput) {
  const Result r = RunCli({"orbits", "Example2-rank4", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("{\n  \"diagram\": \"Example2-rank4\"", 0), 0U)
      << r.out;
}

TEST(CliOrbitsTest, Involution) {
  const Result r =
      RunCli({"orbits", "Example2-rank4", "--involution", "2,1,0,3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Has(r.out, "fixed vertices: 2 4")) << r.out;
}

TEST(CliReduceTest, Example3) {
  const Result r = RunCli({"reduce", "Example3-rank4", "--paint", "1,2,4"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Has(r.out, "representative: (1)")) << r.out;
  EXPECT_TRUE(Has(r.out, "replay: ok")) << r.out;
}

TEST(CliReduceTest, E10WorkedChain) {
  const Result r = RunCli({"reduce", "E10", "--paint", "9,8,6"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Has(r.out, "representative: (0)")) << r.out;
}

TEST(CliRenderTest, Ascii) {
  const Result r = RunCli({"render", "E10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Has(r.out, "            o 0")) << r.out;
}

TEST(CliRenderTest, Dot) {
  const Result r = RunCli({"render", "Example5-rank5", "--format", "dot"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0U);
}

TEST(CliSearchTest, ExtendE9) {
  const Result r = RunCli({"search", "--rank", "2", "--max-label", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Has(r.out, "results: 5")) << r.out;
  EXPECT_TRUE(Has(r.out, "0-1(")) << r.out;
}

TEST(CliSearchTest, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "vogankm_search";
  std::filesystem::remove_all(dir);
  const Result r = RunCli(
      {"search", "--rank", "2", "--max-label", "3", "--out", dir.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "rank2-001.json"));
  std::filesystem::remove_all(dir);
}

TEST(CliCatalogTest, ListAndExport) {
  const Result list = RunCli({"catalog", "list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_TRUE(Has(list.out, "E10")) << list.out;
  const Result exp = RunCli({"catalog", "export", "Example2-rank4"});
  EXPECT_EQ(exp.code, kExitOk);
  EXPECT_TRUE(Has(exp.out, "\"matrix\"")) << exp.out;
}

TEST(CliVerifyTest, SubsetMatches) {
  const Result r = RunCli({"verify-paper", "--only", "Example2-rank4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Has(r.out, "rows: 2, mismatches: 0")) << r.out;
}

TEST(CliVerifyTest, FullRunFlagsCertainMismatches) {
  const Result r = RunCli({"verify-paper"});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_TRUE(Has(r.out, "L36")) << r.out;
}

TEST(CliErrorTest, InputErrorsExitTwo) {
  EXPECT_EQ(RunCli({"classify", "E11"}).code, kExitInputError);
  EXPECT_EQ(RunCli({"classify", "missing/file.json"}).code, kExitInputError);
  EXPECT_EQ(RunCli({"render", "E10", "--format", "svg"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"reduce", "E10", "--paint", "12"}).code, kExitInputError);
  EXPECT_EQ(RunCli({"orbits", "Example2-rank4", "--involution", "1,0,2,3"})
                .code,
            kExitInputError);
  EXPECT_EQ(RunCli({}).code, kExitInputError);
  const Result r = RunCli({"classify", "E11"});
  EXPECT_TRUE(Has(r.err, "E10")) << r.err;
}

}  // namespace
}  // namespace vogankm::cli
