// Copyright 2026 The Indentor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indentor/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "figures.hpp"
#include "gtest/gtest.h"

namespace indentor {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& input = "",
           const RunHooks& hooks = {}) {
  args.insert(args.begin(), "indentor");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, in, out, err, hooks);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("indentor_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, std::string_view content) {
    const fs::path p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  static std::string Read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, CleanCheckExitsZeroSilently) {
  const std::string f = Write("clean.c", testing::kAllman);
  const Result r = Invoke({"--style=allman", "--check", f});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, DirtyCheckExitsOne) {
  const std::string f = Write("dirty.c", testing::kAllman);
  const Result r = Invoke({"--style=gnu", "--check", f});
  EXPECT_EQ(r.code, kExitDeviations);
  EXPECT_NE(r.out.find(f + ":"), std::string::npos);
  EXPECT_NE(r.out.find("deviation"), std::string::npos);
}

TEST_F(CliTest, GnuFormattingOfKrFigure) {
  const std::string f = Write("sample.c", testing::kKr);
  const Result r = Invoke({"--style=gnu", f});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\n    {\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, UnknownStyleIsUsageError) {
  const std::string f = Write("x.c", "x();\n");
  const Result r = Invoke({"--style=nope", f});
  EXPECT_EQ(r.code, kExitUsage);
  for (std::string_view name : kStyleNames) {
    EXPECT_NE(r.err.find(name), std::string::npos) << name;
  }
}

TEST_F(CliTest, SyntaxErrorExitsTwoButOthersAreProcessed) {
  const std::string bad = Write("a_bad.c", "int f() {\n");
  const std::string good = Write("b_good.c", "x();\n");
  const Result r = Invoke({bad, good});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_EQ(r.out, "x();\n");
  EXPECT_EQ(r.err.rfind(bad + ":1:9: ", 0), 0u) << r.err;
}

TEST_F(CliTest, ParseErrorOutranksDeviations) {
  const std::string bad = Write("a.c", "\"open");
  const std::string dirty = Write("b.c", "if(x){y();}");
  EXPECT_EQ(Invoke({"--check", bad, dirty}).code, kExitInputError);
}

TEST_F(CliTest, MissingFileIsInputError) {
  const Result r = Invoke({(dir_ / "absent.c").string()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST_F(CliTest, StdinToStdoutMatchesLibrary) {
  const StyleSpec s = builtin_style("lisp");
  const std::string expected =
      format_source(testing::kKr, s, MergeConfig(s), "<stdin>");
  EXPECT_EQ(Invoke({"--style=lisp"}, std::string(testing::kKr)).out, expected);
  EXPECT_EQ(Invoke({"--style=lisp", "-"}, std::string(testing::kKr)).out,
            expected);
}

TEST_F(CliTest, FlagsOverrideStyleDefaults) {
  const Result r = Invoke({"--style=knf", "--use-spaces", "--indent-size=3"},
                       "void f() { x(); }");
  EXPECT_EQ(r.out, "void f()\n{\n   x();\n}\n");
  const Result tabs = Invoke({"--use-tabs", "--indent-size=4"}, "void f() { x(); }");
  EXPECT_EQ(tabs.out, "void f()\n{\n\tx();\n}\n");
}

TEST_F(CliTest, ConstructPolicyFlags) {
  EXPECT_EQ(Invoke({"--simple-body=same-line"}, "if (x) y();").out,
            "if (x) y();\n");
  EXPECT_EQ(Invoke({"--switch=aligned"}, "switch (x) { case 1: y(); }").out,
            "switch (x) {\ncase 1:\n    y();\n}\n");
  const Result narrow =
      Invoke({"--line-width=30"}, "int f(int alpha, int beta, int gamma);");
  EXPECT_EQ(narrow.out, "int f(int alpha,\n      int beta,\n      int gamma);\n");
}

TEST_F(CliTest, PrecedenceCommandLineOverConfigOverStyle) {
  const std::string cfg = Write("house.cfg", "style=allman\nindent_size=2\n");
  // Config picks the style and width.
  EXPECT_EQ(Invoke({"--config=" + cfg}, "void f() { x(); }").out,
            "void f()\n{\n  x();\n}\n");
  // Command line wins over the config file.
  EXPECT_EQ(Invoke({"--config=" + cfg, "--style=1tbs", "--indent-size=6"},
                "void f() { x(); }")
                .out,
            "void f() {\n      x();\n}\n");
}

TEST_F(CliTest, BadConfigIsUsageError) {
  const std::string cfg = Write("bad.cfg", "style=kr\nindent_size=zero\n");
  const Result r = Invoke({"--config=" + cfg}, "x();");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.err.rfind(cfg + ":2:1: ", 0), 0u) << r.err;
  EXPECT_EQ(Invoke({"--config=" + (dir_ / "none.cfg").string()}, "x();").code,
            kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({"--bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--indent-size=0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--line-width=5"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--report=xml", "--detect"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--simple-body=never"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--check", "--detect"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--use-tabs", "--use-spaces"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--check", "--show-levels"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--in-place"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--in-place", "-"}).code, kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("--style"), std::string::npos);
}

TEST_F(CliTest, DoubleDashEndsFlags) {
  const std::string f = Write("--odd.c", "x();\n");
  const Result r = Invoke({"--check", "--", f});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, ShowLevels) {
  const Result r = Invoke({"--show-levels"}, std::string(testing::kNested));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("[0] int main(void)\n[0] {\n[1]     int k;\n", 0), 0u)
      << r.out;
}

TEST_F(CliTest, DetectTextAndJson) {
  const std::string f = Write("ws.c", testing::kWhitesmiths);
  const Result text = Invoke({"--detect", "--style=nope", f});
  EXPECT_EQ(text.code, kExitOk);  // detection ignores --style
  EXPECT_NE(text.out.find("best: whitesmiths"), std::string::npos);

  const Result json = Invoke({"--detect", "--report=json", f});
  const nlohmann::json j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j.at("file"), f);
  EXPECT_EQ(j.at("best"), "whitesmiths");
  EXPECT_EQ(j.at("scores").size(), 12u);
  EXPECT_TRUE(j.at("deviations").is_array());
}

TEST_F(CliTest, CheckJsonReport) {
  const Result r = Invoke({"--check", "--report=json"}, "if(x){y();}");
  EXPECT_EQ(r.code, kExitDeviations);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("file"), "<stdin>");
  ASSERT_FALSE(j.at("deviations").empty());
  EXPECT_EQ(j.at("deviations").at(0).at("line"), 1);
}

TEST_F(CliTest, DirectoriesRecurseOverSourceExtensions) {
  Write("d/b.cpp", "b();\n");
  Write("d/a.c", "a();\n");
  Write("d/sub/c.hpp", "c();\n");
  Write("d/sub/d.h", "d();\n");
  Write("d/e.cc", "e();\n");
  Write("d/notes.txt", "not code {\n");
  const Result r = Invoke({(dir_ / "d").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "a();\nb();\ne();\nc();\nd();\n");
}

TEST_F(CliTest, MultipleFilesCheckSummaries) {
  const std::string clean = Write("clean.c", "x();\n");
  const std::string dirty1 = Write("dirty1.c", "if(x){y();}\n");
  const std::string dirty2 = Write("dirty2.c", "  z();\n");
  const Result r = Invoke({"--check", clean, dirty1, dirty2});
  EXPECT_EQ(r.code, kExitDeviations);
  EXPECT_EQ(r.out.find(clean), std::string::npos);
  EXPECT_NE(r.out.find(dirty1 + ": 3 deviations\n"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find(dirty2 + ": 1 deviation\n"), std::string::npos);
}

TEST_F(CliTest, InPlaceThenCheckIsClean) {
  const std::string f = Write("fix.c", testing::kKr);
  const Result fmt = Invoke({"--style=whitesmiths", "--in-place", f});
  EXPECT_EQ(fmt.code, kExitOk);
  EXPECT_EQ(fmt.out, "");
  EXPECT_NE(Read(f), testing::kKr);
  EXPECT_EQ(Invoke({"--style=whitesmiths", "--check", f}).code, kExitOk);
  EXPECT_FALSE(fs::exists(f + ".indentor-tmp"));
}

TEST_F(CliTest, InPlaceFailureLeavesOriginalIntact) {
  const std::string f = Write("keep.c", testing::kKr);
  RunHooks hooks;
  bool called = false;
  hooks.before_rename = [&](const fs::path& temporary) {
    called = true;
    EXPECT_TRUE(fs::exists(temporary));
    throw std::runtime_error("disk full");
  };
  const Result r = Invoke({"--style=gnu", "--in-place", f}, "", hooks);
  EXPECT_TRUE(called);
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("disk full"), std::string::npos);
  EXPECT_EQ(Read(f), testing::kKr);
  EXPECT_FALSE(fs::exists(f + ".indentor-tmp"));
}

}  // namespace
}  // namespace indentor
