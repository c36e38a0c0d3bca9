// Copyright 2026 The plc Authors.
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "plc/cli.hpp"
#include "plc/library.hpp"

namespace plc {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("plc_cli_test_" + name)).string();
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  std::string path = TempPath(name);
  std::ofstream(path) << text;
  return path;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kSevenPoints = std::string(PLC_SOURCE_DIR) + "/data/x_seven_points.json";

bool HasLine(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(Cli, LibraryListsEveryName) {
  Outcome r = Cli({"library"});
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"fano", "maclane", "affine3", "pappus", "k9", "qs",
                           "three-concurrent-lines"}) {
    EXPECT_NE(r.out.find(std::string(name) + "  d="), std::string::npos) << name;
  }
}

TEST(Cli, LibraryRoundTrip) {
  for (const NamedConfiguration& n : Library()) {
    EXPECT_EQ(ConfigurationFromJson(ToJson(n.configuration)), n.configuration) << n.name;
    std::string path = WriteTemp(n.name + ".json", ToJson(n.configuration).dump());
    Outcome by_name = Cli({"aut", n.name});
    Outcome by_file = Cli({"aut", "--file", path});
    EXPECT_EQ(by_file.code, 0);
    EXPECT_EQ(by_name.out.substr(by_name.out.find(':')),
              by_file.out.substr(by_file.out.find(':')));
  }
}

TEST(Cli, MinFano) {
  Outcome r = Cli({"min", "fano"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(HasLine(r.out, "min(fano): 22 minimal matroids in 4 orbit classes")) << r.out;
}

TEST(Cli, MZeroPappusIsEmpty) {
  Outcome r = Cli({"m-zero", "pappus"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m-zero(pappus) = {}\n");
  EXPECT_EQ(Cli({"m-zero", "fano"}).out, "m-zero(fano) = {1,2,3,4,5,6,7}\n");
}

TEST(Cli, AutFano) {
  Outcome r = Cli({"aut", "fano"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("aut(fano): order 168,", 0), 0u) << r.out;
}

TEST(Cli, XValSevenPointFamily) {
  Outcome r = Cli({"xval", "--file", kSevenPoints, "--set", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(HasLine(r.out, "127,3")) << r.out;
  Outcome one = Cli({"xval", "--file", kSevenPoints, "--set", "1,2,3,4,5,6,7"});
  EXPECT_TRUE(HasLine(one.out, "val{1,2,3,4,5,6,7} = 3")) << one.out;
}

TEST(Cli, VxSevenPointFamily) {
  for (const char* order : {"sweep", "priority", "reversed"}) {
    Outcome r = Cli({"vx", "--file", kSevenPoints, "--order", order});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(HasLine(r.out, "127,2")) << order;
  }
  EXPECT_EQ(Cli({"vx", "--file", kSevenPoints, "--order", "random"}).code, 1);
}

TEST(Cli, MinX) {
  std::string json = TempPath("minx.json");
  Outcome r = Cli({"min-x", "--file", kSevenPoints, "--json", json});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(HasLine(r.out, "min-x: 1 minimal X-matroids of rank at most three"));
  Json j = Json::parse(Slurp(json));
  ASSERT_EQ(j["minimal"].size(), 1u);
  EXPECT_EQ(MatroidFromJson(j["minimal"][0]), Matroid::UniformRank2(7, FullMask(7)));
}

TEST(Cli, DecomposeFano) {
  std::string json = TempPath("fano_decompose.json");
  Outcome r = Cli({"decompose", "fano", "--json", json});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("decompose(fano): 22 components, complete", 0), 0u) << r.out;
  Json j = Json::parse(Slurp(json));
  EXPECT_EQ(j["components"].size(), 22u);
  EXPECT_TRUE(j["complete"].get<bool>());
}

TEST(Cli, DepthExhaustionExitsTwo) {
  Outcome r = Cli({"decompose", "fano", "--facts", "none", "--depth", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("incomplete"), std::string::npos);
}

TEST(Cli, BudgetExhaustionExitsTwo) {
  Outcome r = Cli({"oracle-check", "fano"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos) << r.err;
}

TEST(Cli, OracleCheckAgrees) {
  Outcome r = Cli({"oracle-check", "qs"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitOneWithOneLine) {
  std::string shared = WriteTemp("shared.json", R"({"d": 5, "lines": [[1,2,3],[1,2,4]]})");
  std::string malformed = WriteTemp("malformed.json", R"({"d": 5, "lines": 7})");
  std::string truncated = WriteTemp("truncated.json", R"({"d": 5, )");
  struct Case {
    std::vector<std::string> args;
    std::string code_name;
  };
  std::vector<Case> cases = {
      {{"min", "--file", shared}, "LinesShareTwoPoints"},
      {{"min", "--file", malformed}, "ParseError"},
      {{"min", "--file", truncated}, "ParseError"},
      {{"min", "no-such-configuration"}, "InvalidArgument"},
      {{"min-x", "--file", WriteTemp("quad.json", R"({"d": 4, "X": [[1,2,3,4]]})")},
       "XMemberNotTriple"},
      {{"xval", "--file", kSevenPoints, "--set", "1,9"}, "LabelOutOfRange"},
  };
  for (const Case& c : cases) {
    Outcome r = Cli(c.args);
    EXPECT_EQ(r.code, 1) << c.code_name;
    EXPECT_NE(r.err.find(c.code_name), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
  EXPECT_EQ(Cli({"frobnicate"}).code, 1);
  EXPECT_EQ(Cli({}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(Cli({"--help"}).code, 0); }

TEST(Cli, MinJsonIsDeterministic) {
  for (const char* name : {"qs", "fano", "three-concurrent-lines"}) {
    std::string a = TempPath(std::string(name) + "_a.json");
    std::string b = TempPath(std::string(name) + "_b.json");
    ASSERT_EQ(Cli({"min", name, "--json", a}).code, 0);
    ASSERT_EQ(Cli({"min", name, "--json", b}).code, 0);
    EXPECT_EQ(Slurp(a), Slurp(b)) << name;
    EXPECT_FALSE(Slurp(a).empty());
  }
}

}  // namespace
}  // namespace plc
