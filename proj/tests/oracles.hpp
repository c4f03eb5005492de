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

// Independent reference implementations used to cross-check the library,
// plus a generator of random well-formed C-like programs.

#ifndef INDENTOR_TESTS_ORACLES_HPP_
#define INDENTOR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indentor::testing {

// Counts `{` bytes that are real braces: outside string and character
// literals, comments, and preprocessor lines. A deliberately naive scanner.
inline int CountCodeBraces(std::string_view s) {
  int count = 0;
  bool line_start = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '\n') {
      line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') continue;
    if (line_start && c == '#') {
      // Skip to the end of the (possibly continued) directive.
      while (i < s.size() && s[i] != '\n') {
        if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == '\n') ++i;
        ++i;
      }
      --i;
      continue;
    }
    line_start = false;
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n') ++i;
      --i;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      i = s.find("*/", i + 2);
      if (i == std::string_view::npos) return count;
      ++i;
    } else if (c == '"' || c == '\'') {
      for (++i; i < s.size() && s[i] != c; ++i) {
        if (s[i] == '\\') ++i;
      }
    } else if (c == '{') {
      ++count;
    }
  }
  return count;
}

// Minimal number of line insertions, deletions and replacements turning
// `a` into `b`, by plain memoized recursion.
inline int LineEditDistance(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                        std::size_t j) {
    if (i == a.size()) return static_cast<int>(b.size() - j);
    if (j == b.size()) return static_cast<int>(a.size() - i);
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = a[i] == b[j] ? go(i + 1, j + 1) : 1 + go(i + 1, j + 1);
    best = std::min({best, 1 + go(i + 1, j), 1 + go(i, j + 1)});
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

// Random programs built from functions, structs, control constructs,
// statements, comments and blank lines.
class ProgramGenerator {
 public:
  struct Options {
    int max_depth = 6;
    int max_nodes = 50;
    // Allow braceless bodies and switch statements, whose depth is not the
    // count of enclosing braces.
    bool only_braced = false;
  };

  ProgramGenerator(unsigned seed, Options options)
      : rng_(seed), options_(options) {}

  std::string Generate() {
    out_.clear();
    nodes_ = 0;
    controls_ = 0;
    const int top = Pick(1, 3);
    for (int i = 0; i < top && Budget(); ++i) {
      if (Chance(20)) {
        Struct();
      } else {
        Function();
      }
    }
    return out_;
  }

  // Braced control constructs emitted by the last Generate().
  int braced_controls() const { return controls_; }

 private:
  int Pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Chance(int percent) { return Pick(1, 100) <= percent; }
  bool Budget() { return nodes_ < options_.max_nodes; }

  // Random whitespace: the formatter must not care.
  void Space() {
    static constexpr std::string_view kSpaces[] = {" ", "  ", "\t", " \n  ",
                                                   "\n"};
    out_ += kSpaces[Pick(0, 4)];
  }
  void Break() { out_ += Chance(80) ? "\n" : "\n\n"; }

  std::string Name() {
    static constexpr std::string_view kNames[] = {"a", "b", "count", "x",
                                                  "total", "p", "node"};
    return std::string(kNames[Pick(0, 6)]);
  }

  std::string Expr() {
    switch (Pick(0, 4)) {
      case 0: return Name();
      case 1: return Name() + " < " + std::to_string(Pick(0, 99));
      case 2: return Name() + " == " + Name();
      case 3: return "f(" + Name() + ", " + Name() + ")";
      default: return "!" + Name();
    }
  }

  void Statement() {
    ++nodes_;
    switch (Pick(0, 5)) {
      case 0: out_ += Name() + " = " + Expr() + ";"; break;
      case 1: out_ += "call(" + Name() + ");"; break;
      case 2: out_ += "return " + Name() + ";"; break;
      case 3: out_ += "int " + Name() + " = " + std::to_string(Pick(0, 9)) + ";"; break;
      case 4: out_ += "s = \"{ not a brace }\";"; break;
      default: out_ += Name() + "++;"; break;
    }
    if (Chance(10)) out_ += " // note";
    Break();
  }

  void Comment() {
    ++nodes_;
    out_ += Chance(50) ? "/* remark { */" : "// remark }";
    Break();
  }

  void Body(int depth) {
    Space();
    out_ += "{";
    Break();
    const int n = Pick(0, 4);
    for (int i = 0; i < n && Budget(); ++i) Member(depth + 1);
    out_ += "}";
  }

  void ControlBody(int depth, bool loop = false) {
    if (loop && !options_.only_braced && Chance(5)) {
      out_ += Chance(50) ? ";" : "\n/* nothing */ ;";
      Break();
      return;
    }
    if (!options_.only_braced && Chance(20) && Budget()) {
      Break();
      Statement();
      return;
    }
    ++controls_;
    Body(depth);
    Break();
  }

  void Member(int depth) {
    if (depth >= options_.max_depth || !Budget()) {
      Statement();
      return;
    }
    switch (Pick(0, 9)) {
      case 0:
      case 1:
      case 2: Statement(); break;
      case 3: Comment(); break;
      case 4: If(depth); break;
      case 5:
        ++nodes_;
        out_ += "while (" + Expr() + ")";
        ControlBody(depth, true);
        break;
      case 6:
        ++nodes_;
        out_ += "for (i = 0; i < " + std::to_string(Pick(1, 9)) + "; i++)";
        ControlBody(depth, true);
        break;
      case 7:
        ++nodes_;
        ++controls_;
        out_ += "do";
        Body(depth);
        Space();
        out_ += "while (" + Expr() + ");";
        Break();
        break;
      case 8:
        if (options_.only_braced) {
          Statement();
        } else {
          Switch(depth);
        }
        break;
      default:
        ++nodes_;
        Body(depth);
        Break();
        break;
    }
  }

  void If(int depth) {
    ++nodes_;
    out_ += "if (" + Expr() + ")";
    ControlBody(depth);
    while (Chance(40) && Budget()) {
      ++nodes_;
      out_ += Chance(50) ? "else if (" + Expr() + ")" : "else";
      const bool last = out_.back() == 'e';
      ControlBody(depth);
      if (last) break;
    }
  }

  void Switch(int depth) {
    ++nodes_;
    ++controls_;
    out_ += "switch (" + Name() + ") {";
    Break();
    const int cases = Pick(1, 3);
    for (int i = 0; i < cases; ++i) {
      out_ += "case " + std::to_string(i) + ":";
      Break();
      Statement();
      out_ += "break;";
      Break();
    }
    out_ += "default:";
    Break();
    Statement();
    out_ += "}";
    Break();
    (void)depth;
  }

  void Function() {
    ++nodes_;
    out_ += "int " + Name() + "_fn(int " + Name() + ", char *" + Name() + ")";
    Body(0);
    Break();
  }

  void Struct() {
    ++nodes_;
    out_ += "struct " + Name() + "_t";
    Space();
    out_ += "{";
    Break();
    const int n = Pick(1, 3);
    for (int i = 0; i < n; ++i) {
      out_ += "int " + Name() + ";";
      Break();
    }
    out_ += "};";
    Break();
  }

  std::mt19937 rng_;
  Options options_;
  std::string out_;
  int nodes_ = 0;
  int controls_ = 0;
};

}  // namespace indentor::testing

#endif  // INDENTOR_TESTS_ORACLES_HPP_
