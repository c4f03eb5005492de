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

#ifndef INDENTOR_CLI_HPP_
#define INDENTOR_CLI_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "indentor/config_file.hpp"
#include "indentor/detector.hpp"
#include "indentor/render.hpp"
#include "indentor/report.hpp"
#include "indentor/style.hpp"

namespace indentor {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDeviations = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsage = 3;

enum class Mode { kFormat, kCheck, kDetect };
enum class ReportFormat { kText, kJson };

inline constexpr std::string_view kStdinName = "<stdin>";

// Test seam: called after the temporary file for an in-place rewrite has
// been written and before it replaces the original. Throwing aborts the
// rewrite.
struct RunHooks {
  std::function<void(const std::filesystem::path& temporary)> before_rename;
};

namespace internal {

inline bool HasSourceExtension(const std::filesystem::path& p) {
  static constexpr std::string_view kExtensions[] = {".c", ".h", ".cc",
                                                     ".cpp", ".hpp"};
  const std::string ext = p.extension().string();
  return std::find(std::begin(kExtensions), std::end(kExtensions), ext) !=
         std::end(kExtensions);
}

// Expands directories into their source files, sorted for stable output.
inline std::vector<std::string> ExpandInputs(
    const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const std::string& input : inputs) {
    std::error_code ec;
    if (input != "-" && std::filesystem::is_directory(input, ec)) {
      std::vector<std::string> found;
      for (const auto& entry :
           std::filesystem::recursive_directory_iterator(input, ec)) {
        if (entry.is_regular_file() && HasSourceExtension(entry.path())) {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }
  return files;
}

inline std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

// Writes `content` next to `path` and renames it over the original, so
// readers see either the old or the new file, never a partial one.
inline void WriteAtomically(const std::string& path, const std::string& content,
                            const RunHooks& hooks) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temporary = target;
  temporary += ".indentor-tmp";
  try {
    {
      std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot create temporary file");
      out << content;
      out.flush();
      if (!out) throw std::runtime_error("cannot write temporary file");
    }
    std::error_code ec;
    fs::permissions(temporary, fs::status(target).permissions(), ec);
    if (hooks.before_rename) hooks.before_rename(temporary);
    fs::rename(temporary, target);
  } catch (...) {
    std::error_code ignored;
    fs::remove(temporary, ignored);
    throw;
  }
}

struct Invocation {
  Mode mode = Mode::kFormat;
  std::vector<std::string> inputs;
  std::string style_name = "kr";
  bool style_given = false;
  ConfigSettings command_line;
  std::string config_path;
  bool in_place = false;
  ReportFormat report = ReportFormat::kText;
};

}  // namespace internal

// Runs the command line `args` (args[0] is the program name) against the
// given streams and returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err,
               const RunHooks& hooks = {}) {
  using internal::Invocation;
  Invocation inv;
  CLI::App app{"Re-indent C-like source code into a named indentation style, "
               "check conformance, or detect the style in use.",
               "indentor"};
  int indent_size = 0;
  int line_width = 0;
  std::string simple_body;
  std::string switch_scheme;
  std::string report = "text";
  bool use_tabs = false;
  bool use_spaces = false;
  bool check = false;
  bool detect = false;
  bool show_levels = false;

  auto* style_opt =
      app.add_option("--style", inv.style_name,
                     "Indentation style: " + StyleNameList() + " (default kr)");
  auto* indent_opt = app.add_option("--indent-size", indent_size,
                                    "Columns per indentation level")
                         ->check(CLI::PositiveNumber);
  auto* tabs_opt = app.add_flag("--use-tabs", use_tabs, "Indent with tabs");
  auto* spaces_opt =
      app.add_flag("--use-spaces", use_spaces, "Indent with spaces");
  tabs_opt->excludes(spaces_opt);
  auto* width_opt = app.add_option("--line-width", line_width,
                                   "Maximum line width (at least 20)")
                        ->check(CLI::Range(20, 100000));
  auto* simple_opt =
      app.add_option("--simple-body", simple_body,
                     "Braceless bodies: same-line or braced (next line)")
          ->check(CLI::IsMember({"same-line", "braced"}));
  auto* switch_opt = app.add_option("--switch", switch_scheme,
                                    "Case labels: aligned or indented")
                         ->check(CLI::IsMember({"aligned", "indented"}));
  auto* check_opt = app.add_flag(
      "--check", check, "Report lines that differ from the formatted output");
  auto* detect_opt = app.add_flag("--detect", detect,
                                  "Report which style the input follows");
  check_opt->excludes(detect_opt);
  app.add_flag("--in-place", inv.in_place, "Rewrite files in place");
  app.add_flag("--show-levels", show_levels,
               "Prefix each line with its nesting level");
  app.add_option("--report", report, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", inv.config_path,
                 "Read settings from a key=value file");
  app.add_option("inputs", inv.inputs,
                 "Files or directories; '-' or none reads standard input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  FormatOverrides& cli = inv.command_line.overrides;
  if (*indent_opt) cli.indent_width = indent_size;
  if (*tabs_opt) cli.use_tabs = true;
  if (*spaces_opt) cli.use_tabs = false;
  if (*width_opt) cli.max_line_width = line_width;
  if (*simple_opt) cli.simple_body_policy = ParseSimpleBody(simple_body);
  if (*switch_opt) cli.switch_scheme = ParseSwitchScheme(switch_scheme);
  if (show_levels) cli.annotate_levels = true;
  inv.style_given = static_cast<bool>(*style_opt);
  inv.mode = check ? Mode::kCheck : detect ? Mode::kDetect : Mode::kFormat;
  inv.report = report == "json" ? ReportFormat::kJson : ReportFormat::kText;
  if (inv.inputs.empty()) inv.inputs.push_back("-");

  const auto usage = [&](const std::string& message) {
    err << "indentor: error: " << message << "\n";
    return kExitUsage;
  };
  if (show_levels && inv.mode != Mode::kFormat) {
    return usage("--show-levels only applies when formatting");
  }
  const bool reads_stdin =
      std::find(inv.inputs.begin(), inv.inputs.end(), "-") != inv.inputs.end();
  if (inv.in_place && (reads_stdin || inv.mode != Mode::kFormat)) {
    return usage(reads_stdin ? "--in-place requires file inputs"
                             : "--in-place only applies when formatting");
  }

  // Command line over config file over style defaults over global defaults.
  ConfigSettings file_settings;
  if (!inv.config_path.empty()) {
    try {
      file_settings = load_config(inv.config_path);
    } catch (const ConfigError& e) {
      err << e.what() << "\n";
      return kExitUsage;
    }
  }
  std::string style_name = inv.style_given ? inv.style_name
                                           : file_settings.style.value_or("kr");
  StyleSpec style;
  FormatConfig config;
  if (inv.mode != Mode::kDetect) {
    try {
      style = builtin_style(style_name);
      config = MergeConfig(
          style, file_settings.overrides.LayeredUnder(cli));
    } catch (const std::invalid_argument& e) {
      return usage(e.what());
    }
  }

  int status = kExitOk;
  // Input errors outrank deviations; every input is still processed.
  const auto raise = [&status](int code) { status = std::max(status, code); };
  std::string stdin_text;
  bool stdin_read = false;
  for (const std::string& input : internal::ExpandInputs(inv.inputs)) {
    const bool from_stdin = input == "-";
    const std::string name = from_stdin ? std::string(kStdinName) : input;
    std::optional<std::string> source;
    if (from_stdin) {
      if (!stdin_read) {
        stdin_text.assign(std::istreambuf_iterator<char>(in),
                          std::istreambuf_iterator<char>());
        stdin_read = true;
      }
      source = stdin_text;
    } else {
      source = internal::ReadFile(input);
    }
    if (!source) {
      err << name << ":1:1: cannot read file\n";
      raise(kExitInputError);
      continue;
    }

    // Output is assembled per file and emitted whole.
    std::ostringstream result;
    try {
      switch (inv.mode) {
        case Mode::kFormat: {
          const std::string formatted =
              format_source(*source, style, config, name);
          if (!inv.in_place) {
            result << formatted;
          } else if (formatted != *source) {
            try {
              internal::WriteAtomically(input, formatted, hooks);
            } catch (const std::exception& e) {
              err << name << ":1:1: cannot rewrite file: " << e.what() << "\n";
              raise(kExitInputError);
            }
          }
          break;
        }
        case Mode::kCheck: {
          const std::vector<Deviation> devs =
              indentor::check(*source, style, config, name);
          if (inv.report == ReportFormat::kJson) {
            result << CheckToJson(name, devs).dump() << "\n";
          } else if (!devs.empty()) {
            result << DeviationsToText(name, devs);
          }
          if (!devs.empty()) raise(kExitDeviations);
          break;
        }
        case Mode::kDetect: {
          const StyleReport r = detect_style(*source, name);
          result << (inv.report == ReportFormat::kJson
                         ? ReportToJson(name, r).dump() + "\n"
                         : ReportToText(name, r));
          break;
        }
      }
    } catch (const SourceError& e) {
      err << e.what() << "\n";
      raise(kExitInputError);
      continue;
    }
    out << result.str();
  }
  out.flush();
  return status;
}

}  // namespace indentor

#endif  // INDENTOR_CLI_HPP_
