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

#include "indentor/config_file.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace indentor {
namespace {

TEST(ConfigFileTest, StyleOnly) {
  const ConfigSettings s = ParseConfig("style=knf\n");
  EXPECT_EQ(s.style, "knf");
  EXPECT_FALSE(s.overrides.indent_width.has_value());
  EXPECT_FALSE(s.overrides.use_tabs.has_value());
}

TEST(ConfigFileTest, IndentSizeOverKnfDefaults) {
  const ConfigSettings s = ParseConfig("indent_size=8\n");
  const FormatConfig c = MergeConfig(builtin_style("knf"), s.overrides);
  EXPECT_EQ(c.indent_width, 8);
  EXPECT_TRUE(c.use_tabs);
}

TEST(ConfigFileTest, InvalidValueReportsLine) {
  try {
    ParseConfig("indent_size=zero\n", "x.cfg");
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(std::string(e.what()).rfind("x.cfg:1:1: ", 0), 0u) << e.what();
  }
}

TEST(ConfigFileTest, EveryKey) {
  const ConfigSettings s = ParseConfig(
      "# house style\n"
      "style = Allman\n"
      "\n"
      "indent_size=3   # narrow\n"
      "use_tabs=true\n"
      "line_width=100\n"
      "simple_body=same-line\n"
      "switch=aligned\n"
      "null_body_comment=false\n"
      "do_while_cuddle=no\n");
  EXPECT_EQ(s.style, "allman");
  EXPECT_EQ(s.overrides.indent_width, 3);
  EXPECT_EQ(s.overrides.use_tabs, true);
  EXPECT_EQ(s.overrides.max_line_width, 100);
  EXPECT_EQ(s.overrides.simple_body_policy, SimpleBodyPolicy::kSameLine);
  EXPECT_EQ(s.overrides.switch_scheme, SwitchScheme::kCasesAtSwitchColumn);
  EXPECT_EQ(s.overrides.null_body_comment, false);
  EXPECT_EQ(s.overrides.do_while_cuddle, false);
}

TEST(ConfigFileTest, Errors) {
  const auto line_of = [](const std::string& text) {
    try {
      ParseConfig(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("style=kr\ncolour=blue\n"), 2);
  EXPECT_EQ(line_of("\n\nstyle=nope\n"), 3);
  EXPECT_EQ(line_of("use_tabs=maybe"), 1);
  EXPECT_EQ(line_of("line_width=10"), 1);
  EXPECT_EQ(line_of("switch=sideways"), 1);
  EXPECT_EQ(line_of("just a line"), 1);
  EXPECT_EQ(line_of("indent_size=-2"), 1);
  EXPECT_EQ(line_of("indent_size=4x"), 1);
}

TEST(ConfigFileTest, LoadFromDisk) {
  const auto path =
      std::filesystem::temp_directory_path() / "indentor_config_test.cfg";
  {
    std::ofstream out(path);
    out << "style=gnu\r\nline_width=60\r\n";
  }
  const ConfigSettings s = load_config(path.string());
  EXPECT_EQ(s.style, "gnu");
  EXPECT_EQ(s.overrides.max_line_width, 60);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path.string()), ConfigError);
}

}  // namespace
}  // namespace indentor
