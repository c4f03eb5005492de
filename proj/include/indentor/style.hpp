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

#ifndef INDENTOR_STYLE_HPP_
#define INDENTOR_STYLE_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace indentor {

enum class BracePlacement {
  kSameLine,              // `{` ends the header line
  kNextLineHeaderColumn,  // own line, header's column
  kNextLineIndented,      // own line, header column + brace_extra_indent
};

enum class CloseBracePlacement {
  kHeaderColumn,
  kBraceColumn,
  kBodyColumn,
  kCuddleLastStatement,
};

enum class BodyAnchor { kHeader, kBrace };

// A horizontal offset expressed partly in indent units and partly in fixed
// columns, resolved against the configured indent width.
struct Indent {
  int units = 0;
  int columns = 0;

  int Resolve(int indent_width) const { return units * indent_width + columns; }
  bool IsZero() const { return units == 0 && columns == 0; }
  friend bool operator==(const Indent&, const Indent&) = default;
};

struct StyleSpec {
  std::string name;
  BracePlacement function_brace = BracePlacement::kNextLineHeaderColumn;
  BracePlacement control_brace = BracePlacement::kSameLine;
  BracePlacement class_brace = BracePlacement::kNextLineHeaderColumn;
  Indent brace_extra_indent;
  BodyAnchor body_relative_to = BodyAnchor::kHeader;
  Indent body_offset{1, 0};
  CloseBracePlacement close_brace = CloseBracePlacement::kHeaderColumn;
  bool statement_on_open_brace_line = false;
  bool short_function_one_line = false;
  bool space_before_call_paren = false;
  int default_indent_width = 4;
  bool default_use_tabs = false;

  bool UsesPlacement(BracePlacement p) const {
    return function_brace == p || control_brace == p || class_brace == p;
  }
  // `} else` on one line.
  bool CuddlesElse() const {
    return control_brace == BracePlacement::kSameLine &&
           close_brace == CloseBracePlacement::kHeaderColumn;
  }
  friend bool operator==(const StyleSpec&, const StyleSpec&) = default;
};

inline constexpr std::array<std::string_view, 12> kStyleNames = {
    "kr",          "1tbs", "stroustrup", "allman", "knf",  "whitesmiths",
    "gnu",         "horstmann", "pico",  "banner", "lisp", "ratliff"};

inline std::string StyleNameList() {
  std::string out;
  for (std::string_view name : kStyleNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

class UnknownStyle : public std::invalid_argument {
 public:
  explicit UnknownStyle(const std::string& name)
      : std::invalid_argument("unknown style '" + name +
                              "'; valid styles: " + StyleNameList()),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

namespace internal {

inline StyleSpec MakeStyle(std::string_view name) {
  using BP = BracePlacement;
  using CP = CloseBracePlacement;
  StyleSpec s;
  s.name = std::string(name);
  if (name == "kr") return s;
  if (name == "1tbs") {
    s.function_brace = s.class_brace = BP::kSameLine;
  } else if (name == "stroustrup") {
    s.class_brace = BP::kSameLine;
    s.short_function_one_line = true;
  } else if (name == "allman") {
    s.control_brace = BP::kNextLineHeaderColumn;
  } else if (name == "knf") {
    s.default_indent_width = 8;
    s.default_use_tabs = true;
  } else if (name == "whitesmiths") {
    s.function_brace = s.control_brace = s.class_brace =
        BP::kNextLineIndented;
    s.brace_extra_indent = {1, 0};
    s.body_relative_to = BodyAnchor::kBrace;
    s.body_offset = {0, 0};
    s.close_brace = CP::kBraceColumn;
  } else if (name == "gnu") {
    s.control_brace = BP::kNextLineIndented;
    s.brace_extra_indent = {0, 2};
    s.body_relative_to = BodyAnchor::kBrace;
    s.body_offset = {0, 2};
    s.close_brace = CP::kBraceColumn;
    s.space_before_call_paren = true;
    s.default_indent_width = 2;
  } else if (name == "horstmann") {
    s.control_brace = BP::kNextLineHeaderColumn;
    s.statement_on_open_brace_line = true;
    s.default_indent_width = 2;
  } else if (name == "pico") {
    s.control_brace = BP::kNextLineHeaderColumn;
    s.statement_on_open_brace_line = true;
    s.close_brace = CP::kCuddleLastStatement;
    s.default_indent_width = 2;
  } else if (name == "banner") {
    s.function_brace = s.control_brace = s.class_brace = BP::kSameLine;
    s.default_indent_width = 2;
  } else if (name == "lisp") {
    s.function_brace = s.control_brace = s.class_brace = BP::kSameLine;
    s.close_brace = CP::kCuddleLastStatement;
  } else if (name == "ratliff") {
    s.function_brace = s.control_brace = s.class_brace = BP::kSameLine;
    s.close_brace = CP::kBodyColumn;
  }
  return s;
}

}  // namespace internal

// One of the twelve built-in styles, matched case-insensitively.
inline StyleSpec builtin_style(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (std::find(kStyleNames.begin(), kStyleNames.end(), lower) ==
      kStyleNames.end()) {
    throw UnknownStyle(std::string(name));
  }
  return internal::MakeStyle(lower);
}

enum class SimpleBodyPolicy { kSameLine, kNextLineBraced };
enum class SwitchScheme { kCasesAtSwitchColumn, kCasesIndented };

struct FormatConfig {
  int indent_width = 4;
  bool use_tabs = false;
  int max_line_width = 79;
  SimpleBodyPolicy simple_body_policy = SimpleBodyPolicy::kNextLineBraced;
  SwitchScheme switch_scheme = SwitchScheme::kCasesIndented;
  bool null_body_comment = true;
  bool do_while_cuddle = true;
  bool annotate_levels = false;

  friend bool operator==(const FormatConfig&, const FormatConfig&) = default;
};

// Settings the user gave explicitly; anything unset falls back to the
// style's defaults and then to FormatConfig's.
struct FormatOverrides {
  std::optional<int> indent_width;
  std::optional<bool> use_tabs;
  std::optional<int> max_line_width;
  std::optional<SimpleBodyPolicy> simple_body_policy;
  std::optional<SwitchScheme> switch_scheme;
  std::optional<bool> null_body_comment;
  std::optional<bool> do_while_cuddle;
  std::optional<bool> annotate_levels;

  // Fields set in `higher` win.
  FormatOverrides LayeredUnder(const FormatOverrides& higher) const {
    FormatOverrides out = *this;
    if (higher.indent_width) out.indent_width = higher.indent_width;
    if (higher.use_tabs) out.use_tabs = higher.use_tabs;
    if (higher.max_line_width) out.max_line_width = higher.max_line_width;
    if (higher.simple_body_policy) {
      out.simple_body_policy = higher.simple_body_policy;
    }
    if (higher.switch_scheme) out.switch_scheme = higher.switch_scheme;
    if (higher.null_body_comment) {
      out.null_body_comment = higher.null_body_comment;
    }
    if (higher.do_while_cuddle) out.do_while_cuddle = higher.do_while_cuddle;
    if (higher.annotate_levels) out.annotate_levels = higher.annotate_levels;
    return out;
  }
};

inline void Validate(const FormatConfig& config) {
  if (config.indent_width < 1) {
    throw std::invalid_argument("indent width must be at least 1");
  }
  if (config.max_line_width < 20) {
    throw std::invalid_argument("line width must be at least 20");
  }
}

inline FormatConfig MergeConfig(const StyleSpec& style,
                                const FormatOverrides& overrides = {}) {
  FormatConfig c;
  c.indent_width = overrides.indent_width.value_or(style.default_indent_width);
  c.use_tabs = overrides.use_tabs.value_or(style.default_use_tabs);
  c.max_line_width = overrides.max_line_width.value_or(c.max_line_width);
  c.simple_body_policy =
      overrides.simple_body_policy.value_or(c.simple_body_policy);
  c.switch_scheme = overrides.switch_scheme.value_or(c.switch_scheme);
  c.null_body_comment =
      overrides.null_body_comment.value_or(c.null_body_comment);
  c.do_while_cuddle = overrides.do_while_cuddle.value_or(c.do_while_cuddle);
  c.annotate_levels = overrides.annotate_levels.value_or(c.annotate_levels);
  Validate(c);
  return c;
}

}  // namespace indentor

#endif  // INDENTOR_STYLE_HPP_
