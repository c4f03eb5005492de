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

#include "indentor/style.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"

namespace indentor {
namespace {

TEST(StyleTest, TwelveDistinctBuiltins) {
  std::set<std::string> names;
  for (std::string_view name : kStyleNames) {
    names.insert(builtin_style(name).name);
  }
  EXPECT_EQ(names.size(), 12u);
  EXPECT_EQ(StyleNameList(),
            "kr, 1tbs, stroustrup, allman, knf, whitesmiths, gnu, horstmann, "
            "pico, banner, lisp, ratliff");
}

TEST(StyleTest, GnuBracesIndentTwoColumns) {
  const StyleSpec gnu = builtin_style("gnu");
  EXPECT_EQ(gnu.brace_extra_indent.Resolve(8), 2);
  EXPECT_EQ(gnu.brace_extra_indent.Resolve(2), 2);
  EXPECT_EQ(gnu.control_brace, BracePlacement::kNextLineIndented);
  EXPECT_EQ(gnu.function_brace, BracePlacement::kNextLineHeaderColumn);
  EXPECT_EQ(gnu.close_brace, CloseBracePlacement::kBraceColumn);
  EXPECT_TRUE(gnu.space_before_call_paren);
  EXPECT_EQ(gnu.default_indent_width, 2);
}

TEST(StyleTest, KnfUsesEightColumnTabs) {
  const StyleSpec knf = builtin_style("knf");
  EXPECT_EQ(knf.default_indent_width, 8);
  EXPECT_TRUE(knf.default_use_tabs);
  EXPECT_EQ(knf.function_brace, BracePlacement::kNextLineHeaderColumn);
  EXPECT_EQ(knf.control_brace, BracePlacement::kSameLine);
}

TEST(StyleTest, NamesAreCaseInsensitive) {
  EXPECT_EQ(builtin_style("KR").name, builtin_style("kr").name);
  EXPECT_EQ(builtin_style("Allman").name, "allman");
  EXPECT_EQ(builtin_style("1TBS").name, "1tbs");
}

TEST(StyleTest, UnknownStyleListsValidNames) {
  try {
    builtin_style("nope");
    FAIL() << "expected an error";
  } catch (const UnknownStyle& e) {
    EXPECT_EQ(e.name(), "nope");
    const std::string message = e.what();
    for (std::string_view name : kStyleNames) {
      EXPECT_NE(message.find(name), std::string::npos) << name;
    }
  }
}

TEST(StyleTest, TablePlacements) {
  EXPECT_EQ(builtin_style("kr").function_brace,
            BracePlacement::kNextLineHeaderColumn);
  EXPECT_EQ(builtin_style("kr").control_brace, BracePlacement::kSameLine);
  EXPECT_EQ(builtin_style("1tbs").function_brace, BracePlacement::kSameLine);
  EXPECT_EQ(builtin_style("stroustrup").class_brace, BracePlacement::kSameLine);
  EXPECT_TRUE(builtin_style("stroustrup").short_function_one_line);
  EXPECT_EQ(builtin_style("allman").control_brace,
            BracePlacement::kNextLineHeaderColumn);
  EXPECT_EQ(builtin_style("whitesmiths").close_brace,
            CloseBracePlacement::kBraceColumn);
  EXPECT_EQ(builtin_style("whitesmiths").body_relative_to, BodyAnchor::kBrace);
  EXPECT_TRUE(builtin_style("horstmann").statement_on_open_brace_line);
  EXPECT_EQ(builtin_style("pico").close_brace,
            CloseBracePlacement::kCuddleLastStatement);
  EXPECT_EQ(builtin_style("banner").close_brace,
            CloseBracePlacement::kHeaderColumn);
  EXPECT_EQ(builtin_style("lisp").close_brace,
            CloseBracePlacement::kCuddleLastStatement);
  EXPECT_EQ(builtin_style("ratliff").close_brace,
            CloseBracePlacement::kBodyColumn);
}

TEST(StyleTest, CuddledElseOnlyForSameLineStyles) {
  EXPECT_TRUE(builtin_style("1tbs").CuddlesElse());
  EXPECT_TRUE(builtin_style("kr").CuddlesElse());
  EXPECT_FALSE(builtin_style("allman").CuddlesElse());
  EXPECT_FALSE(builtin_style("horstmann").CuddlesElse());
}

TEST(StyleTest, MergeConfigLayersOverridesOverStyleDefaults) {
  const StyleSpec knf = builtin_style("knf");
  const FormatConfig plain = MergeConfig(knf);
  EXPECT_EQ(plain.indent_width, 8);
  EXPECT_TRUE(plain.use_tabs);
  EXPECT_EQ(plain.max_line_width, 79);
  EXPECT_EQ(plain.simple_body_policy, SimpleBodyPolicy::kNextLineBraced);
  EXPECT_EQ(plain.switch_scheme, SwitchScheme::kCasesIndented);
  EXPECT_TRUE(plain.null_body_comment);
  EXPECT_TRUE(plain.do_while_cuddle);
  EXPECT_FALSE(plain.annotate_levels);

  FormatOverrides o;
  o.indent_width = 3;
  o.use_tabs = false;
  const FormatConfig custom = MergeConfig(knf, o);
  EXPECT_EQ(custom.indent_width, 3);
  EXPECT_FALSE(custom.use_tabs);
}

TEST(StyleTest, LayeredUnderPrefersHigherLayer) {
  FormatOverrides low;
  low.indent_width = 2;
  low.max_line_width = 100;
  FormatOverrides high;
  high.indent_width = 6;
  const FormatOverrides merged = low.LayeredUnder(high);
  EXPECT_EQ(merged.indent_width, 6);
  EXPECT_EQ(merged.max_line_width, 100);
}

TEST(StyleTest, ConfigValidation) {
  FormatOverrides o;
  o.indent_width = 0;
  EXPECT_THROW(MergeConfig(builtin_style("kr"), o), std::invalid_argument);
  FormatOverrides narrow;
  narrow.max_line_width = 19;
  EXPECT_THROW(MergeConfig(builtin_style("kr"), narrow), std::invalid_argument);
  narrow.max_line_width = 20;
  EXPECT_NO_THROW(MergeConfig(builtin_style("kr"), narrow));
}

TEST(StyleTest, IndentResolvesUnitsAndColumns) {
  EXPECT_EQ((Indent{1, 0}.Resolve(4)), 4);
  EXPECT_EQ((Indent{0, 2}.Resolve(4)), 2);
  EXPECT_EQ((Indent{2, 1}.Resolve(3)), 7);
}

}  // namespace
}  // namespace indentor
