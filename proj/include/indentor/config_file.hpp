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

#ifndef INDENTOR_CONFIG_FILE_HPP_
#define INDENTOR_CONFIG_FILE_HPP_

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indentor/style.hpp"

namespace indentor {

// A malformed configuration file; line() is 1-based, 0 when the file itself
// could not be read.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, int line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ":1: " +
                           message),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

// Settings read from a configuration file or the command line. Unset fields
// fall through to the next layer.
struct ConfigSettings {
  std::optional<std::string> style;
  FormatOverrides overrides;
};

namespace internal {

inline std::string_view Trim(std::string_view s) {
  const std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace internal

// The value parsers below return nullopt for text they do not accept.

inline std::optional<int> ParsePositiveInt(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) return std::nullopt;
  return value;
}

inline std::optional<bool> ParseBool(std::string_view text) {
  if (text == "true" || text == "yes" || text == "on" || text == "1") {
    return true;
  }
  if (text == "false" || text == "no" || text == "off" || text == "0") {
    return false;
  }
  return std::nullopt;
}

inline std::optional<SimpleBodyPolicy> ParseSimpleBody(std::string_view text) {
  if (text == "same-line") return SimpleBodyPolicy::kSameLine;
  if (text == "braced") return SimpleBodyPolicy::kNextLineBraced;
  return std::nullopt;
}

inline std::optional<SwitchScheme> ParseSwitchScheme(std::string_view text) {
  if (text == "aligned") return SwitchScheme::kCasesAtSwitchColumn;
  if (text == "indented") return SwitchScheme::kCasesIndented;
  return std::nullopt;
}

// Parses `key=value` lines; blank lines and `#` comments are ignored.
inline ConfigSettings ParseConfig(std::string_view text,
                                  const std::string& path = "<config>") {
  ConfigSettings settings;
  FormatOverrides& o = settings.overrides;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = internal::Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path, line_no, "expected key=value");
    }
    const std::string key(internal::Trim(line.substr(0, eq)));
    const std::string value(internal::Trim(line.substr(eq + 1)));
    const auto invalid = [&]() {
      return ConfigError(path, line_no,
                         "invalid value '" + value + "' for key '" + key + "'");
    };
    const auto require = [&](auto parsed) {
      if (!parsed) throw invalid();
      return *parsed;
    };

    if (key == "style") {
      try {
        settings.style = builtin_style(value).name;
      } catch (const UnknownStyle& e) {
        throw ConfigError(path, line_no, e.what());
      }
    } else if (key == "indent_size") {
      o.indent_width = require(ParsePositiveInt(value));
    } else if (key == "use_tabs") {
      o.use_tabs = require(ParseBool(value));
    } else if (key == "line_width") {
      const int width = require(ParsePositiveInt(value));
      if (width < 20) throw invalid();
      o.max_line_width = width;
    } else if (key == "simple_body") {
      o.simple_body_policy = require(ParseSimpleBody(value));
    } else if (key == "switch") {
      o.switch_scheme = require(ParseSwitchScheme(value));
    } else if (key == "null_body_comment") {
      o.null_body_comment = require(ParseBool(value));
    } else if (key == "do_while_cuddle") {
      o.do_while_cuddle = require(ParseBool(value));
    } else {
      throw ConfigError(path, line_no, "unknown key '" + key + "'");
    }
  }
  return settings;
}

inline ConfigSettings load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot read configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path);
}

}  // namespace indentor

#endif  // INDENTOR_CONFIG_FILE_HPP_
