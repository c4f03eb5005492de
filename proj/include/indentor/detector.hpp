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

#ifndef INDENTOR_DETECTOR_HPP_
#define INDENTOR_DETECTOR_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indentor/block_tree.hpp"
#include "indentor/lexer.hpp"
#include "indentor/render.hpp"
#include "indentor/style.hpp"

namespace indentor {

// Columns are measured with 8-column tab stops: the author's tab setting is
// unknown, and eight is the traditional hardware tab.
inline constexpr int kDetectorTabWidth = 8;

enum class OpenRelation { kSameLine, kNextLineAtHeader, kNextLineIndented };
enum class CloseRelation { kHeaderColumn, kBraceColumn, kBodyColumn, kCuddled };

inline std::string_view RelationName(OpenRelation r) {
  switch (r) {
    case OpenRelation::kSameLine: return "open brace on header line";
    case OpenRelation::kNextLineAtHeader: return "open brace at header column";
    case OpenRelation::kNextLineIndented: return "open brace indented";
  }
  return "?";
}

inline std::string_view RelationName(CloseRelation r) {
  switch (r) {
    case CloseRelation::kHeaderColumn: return "close brace at header column";
    case CloseRelation::kBraceColumn: return "close brace at brace column";
    case CloseRelation::kBodyColumn: return "close brace at body column";
    case CloseRelation::kCuddled: return "close brace after last statement";
  }
  return "?";
}

// Measurements of one braced block owned by a header. Columns are 0-based
// visual columns.
struct Observation {
  HeaderKind construct = HeaderKind::kIf;
  OpenRelation open_brace_relation = OpenRelation::kSameLine;
  CloseRelation close_brace_relation = CloseRelation::kHeaderColumn;
  int body_indent_delta = 0;
  int line = 0;

  int header_column = 0;
  int brace_column = 0;
  int close_column = 0;
  std::optional<int> body_column;
  bool open_on_header_line = false;
  bool close_cuddled = false;
  bool whole_block_on_one_line = false;
  // First member is a plain statement (the only kind that may share the
  // open-brace line) and whether it actually does.
  bool lead_is_statement = false;
  bool lead_shares_brace_line = false;
  bool is_switch = false;
  bool empty = false;
  // A `//` comment ends the last line, so the close brace cannot share it.
  bool close_after_line_comment = false;
  // Switch bodies: column of the first case label and of the first
  // statement placed on a line after a label.
  std::optional<int> label_column;
  std::optional<int> case_statement_column;
};

inline constexpr std::string_view kAmbiguous = "ambiguous";

struct Deviation {
  int line = 0;
  std::string expected;
  std::string found;
  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct StyleReport {
  std::map<std::string, double> scores;
  std::string best = std::string(kAmbiguous);
  int observations_total = 0;
  std::vector<Deviation> deviations;
};

namespace internal {

class ColumnMap {
 public:
  explicit ColumnMap(std::string_view source) {
    std::size_t start = 0;
    while (start <= source.size()) {
      const std::size_t end = source.find('\n', start);
      lines_.push_back(source.substr(
          start, end == std::string_view::npos ? std::string_view::npos
                                               : end - start));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  }

  // Visual column of a 1-based (line, byte column) position.
  int Visual(int line, int column) const {
    if (line < 1 || line > static_cast<int>(lines_.size())) return column - 1;
    const std::string_view text = lines_[line - 1];
    int vcol = 0;
    for (int i = 0; i + 1 < column && i < static_cast<int>(text.size()); ++i) {
      vcol = text[i] == '\t' ? (vcol / kDetectorTabWidth + 1) * kDetectorTabWidth
                             : vcol + 1;
    }
    return vcol;
  }
  int Visual(const Token& t) const { return Visual(t.line, t.column); }

  // Whether only whitespace and `}` precede the token on its line.
  bool FollowsOnlyCloseBraces(const Token& t) const {
    if (t.line < 1 || t.line > static_cast<int>(lines_.size())) return false;
    const std::string_view before = lines_[t.line - 1].substr(0, t.column - 1);
    return before.find('}') != std::string_view::npos &&
           before.find_first_not_of(" \t\v\f}") == std::string_view::npos;
  }

  int Indentation(int line) const {
    if (line < 1 || line > static_cast<int>(lines_.size())) return 0;
    const std::string_view text = lines_[line - 1];
    const std::size_t first = text.find_first_not_of(" \t\v\f");
    return Visual(line, static_cast<int>(
                            first == std::string_view::npos ? 1 : first + 1));
  }

 private:
  std::vector<std::string_view> lines_;
};

// First member that fixes the body column: trailing comments, preprocessor
// lines and access labels sit elsewhere.
inline const Node* LeadMember(const Block& block) {
  for (const Node& child : block.children) {
    if (const auto* c = child.get_if<Comment>(); c && c->trailing) continue;
    if (child.is<Preprocessor>()) continue;
    if (const auto* l = child.get_if<Label>();
        l && l->kind == HeaderKind::kAccessLabel) {
      continue;
    }
    return &child;
  }
  return nullptr;
}

inline Observation Measure(const Header& h, const Block& block,
                           const Token* previous_to_close,
                           const ColumnMap& columns) {
  Observation o;
  o.construct = h.kind;
  o.is_switch = h.kind == HeaderKind::kSwitch;
  const Token& first = h.tokens.empty() ? block.open : h.tokens.front();
  o.line = first.line;
  o.header_column = columns.FollowsOnlyCloseBraces(first)
                        ? columns.Indentation(first.line)
                        : columns.Visual(first);
  const int header_end_line =
      h.tokens.empty() ? first.line : h.tokens.back().EndLine();
  o.open_on_header_line = block.open.line == header_end_line;
  o.brace_column = columns.Visual(block.open);
  if (o.open_on_header_line) {
    o.open_brace_relation = OpenRelation::kSameLine;
  } else if (o.brace_column > o.header_column) {
    o.open_brace_relation = OpenRelation::kNextLineIndented;
  } else {
    o.open_brace_relation = OpenRelation::kNextLineAtHeader;
  }

  o.empty = block.children.empty();
  // Case-label columns follow the switch scheme, which is configuration
  // rather than style; the label-to-statement step still measures the unit.
  const Node* lead = LeadMember(block);
  const auto* label = lead ? lead->get_if<Label>() : nullptr;
  if (label) {
    o.label_column = columns.Visual(label->tokens.front());
    int label_line = 0;
    for (const Node& child : block.children) {
      if (const auto* l = child.get_if<Label>()) {
        label_line = l->tokens.back().line;
        continue;
      }
      if (child.is<Comment>() || child.is<Preprocessor>()) continue;
      const Token* t = FirstToken(child);
      if (t == nullptr || label_line == 0) continue;
      if (t->line != label_line) o.case_statement_column = columns.Visual(*t);
      break;
    }
  } else if (lead) {
    if (const Token* t = FirstToken(*lead)) {
      o.body_column = columns.Visual(*t);
      o.body_indent_delta = std::max(0, *o.body_column - o.header_column);
      o.lead_shares_brace_line = t->line == block.open.line;
    }
    o.lead_is_statement = lead == &block.children.front() &&
                          lead->is<Statement>() &&
                          !lead->as<Statement>().tokens.empty();
  }

  o.close_column = columns.Visual(block.close);
  const int prev_line =
      previous_to_close ? previous_to_close->EndLine() : block.open.line;
  o.close_cuddled = block.close.line == prev_line;
  o.close_after_line_comment =
      previous_to_close && previous_to_close->Is(TokenKind::kLineComment);
  o.whole_block_on_one_line =
      o.open_on_header_line && block.close.line == block.open.line;
  if (o.close_cuddled) {
    o.close_brace_relation = CloseRelation::kCuddled;
  } else if (o.close_column == o.header_column) {
    o.close_brace_relation = CloseRelation::kHeaderColumn;
  } else if (!o.open_on_header_line && o.close_column == o.brace_column) {
    o.close_brace_relation = CloseRelation::kBraceColumn;
  } else {
    o.close_brace_relation = CloseRelation::kBodyColumn;
  }
  return o;
}

inline void ObserveAll(const std::vector<Node>& nodes, const ColumnMap& columns,
                       std::vector<Observation>& out);

inline void ObserveNode(const Node& node, const ColumnMap& columns,
                        std::vector<Observation>& out) {
  if (const auto* h = node.get_if<Header>()) {
    if (!h->body) return;
    if (const auto* block = h->body->get_if<Block>()) {
      const Token* before_close = nullptr;
      for (auto it = block->children.rbegin(); it != block->children.rend();
           ++it) {
        if ((before_close = LastToken(*it)) != nullptr) break;
      }
      out.push_back(Measure(*h, *block, before_close, columns));
      ObserveAll(block->children, columns, out);
    } else {
      ObserveNode(*h->body, columns, out);
    }
  } else if (const auto* block = node.get_if<Block>()) {
    ObserveAll(block->children, columns, out);
  } else if (const auto* chain = node.get_if<Chain>()) {
    ObserveAll(chain->links, columns, out);
  }
}

inline void ObserveAll(const std::vector<Node>& nodes, const ColumnMap& columns,
                       std::vector<Observation>& out) {
  for (const Node& n : nodes) ObserveNode(n, columns, out);
}

inline BracePlacement ExpectedPlacement(const StyleSpec& style,
                                        HeaderKind kind) {
  switch (kind) {
    case HeaderKind::kFunctionDef: return style.function_brace;
    case HeaderKind::kClassDef: return style.class_brace;
    default: return style.control_brace;
  }
}

// Returns a description of the first way `o` departs from `style` laid out
// with its default indent width, or nullopt when consistent.
inline std::optional<std::pair<std::string, std::string>> Inconsistency(
    const StyleSpec& style, const Observation& o) {
  using Mismatch = std::pair<std::string, std::string>;
  const int unit = style.default_indent_width;
  if (o.construct == HeaderKind::kFunctionDef && o.whole_block_on_one_line) {
    if (style.short_function_one_line) return std::nullopt;
    // An empty body closed on the brace line is ordinary for cuddling styles.
    if (!o.empty) {
      return Mismatch{"function body on its own lines", "one-line function"};
    }
  }

  const BracePlacement placement = ExpectedPlacement(style, o.construct);
  int brace_column = o.header_column;
  switch (placement) {
    case BracePlacement::kSameLine:
      if (!o.open_on_header_line) {
        return Mismatch{std::string(RelationName(OpenRelation::kSameLine)),
                        std::string(RelationName(o.open_brace_relation))};
      }
      break;
    case BracePlacement::kNextLineHeaderColumn:
    case BracePlacement::kNextLineIndented: {
      if (placement == BracePlacement::kNextLineIndented) {
        brace_column += style.brace_extra_indent.Resolve(unit);
      }
      if (o.open_on_header_line || o.brace_column != brace_column) {
        return Mismatch{
            "open brace on its own line at column " +
                std::to_string(brace_column + 1),
            o.open_on_header_line
                ? std::string(RelationName(o.open_brace_relation))
                : "open brace at column " + std::to_string(o.brace_column + 1)};
      }
      const bool should_share =
          style.statement_on_open_brace_line && o.lead_is_statement;
      if (o.body_column && should_share != o.lead_shares_brace_line) {
        return Mismatch{should_share ? "first statement on the brace line"
                                     : "open brace alone on its line",
                        o.lead_shares_brace_line
                            ? "first statement on the brace line"
                            : "open brace alone on its line"};
      }
      break;
    }
  }

  const int anchor = style.body_relative_to == BodyAnchor::kHeader
                         ? o.header_column
                         : brace_column;
  const int body_column = anchor + style.body_offset.Resolve(unit);
  if (o.label_column && *o.label_column != o.header_column &&
      *o.label_column != body_column) {
    return Mismatch{"case labels at column " +
                        std::to_string(o.header_column + 1) + " or " +
                        std::to_string(body_column + 1),
                    "case labels at column " +
                        std::to_string(*o.label_column + 1)};
  }
  if (o.label_column && o.case_statement_column &&
      *o.case_statement_column != *o.label_column + unit) {
    return Mismatch{
        "case statements at column " + std::to_string(*o.label_column + unit + 1),
        "case statements at column " +
            std::to_string(*o.case_statement_column + 1)};
  }
  if (o.body_column && *o.body_column != body_column) {
    return Mismatch{"body at column " + std::to_string(body_column + 1),
                    "body at column " + std::to_string(*o.body_column + 1)};
  }

  std::optional<int> close_column;
  switch (style.close_brace) {
    case CloseBracePlacement::kCuddleLastStatement:
      if (!o.close_cuddled &&
          !(o.close_after_line_comment && o.close_column == body_column)) {
        return Mismatch{std::string(RelationName(CloseRelation::kCuddled)),
                        "close brace on its own line"};
      }
      return std::nullopt;
    case CloseBracePlacement::kHeaderColumn: close_column = o.header_column; break;
    case CloseBracePlacement::kBraceColumn: close_column = brace_column; break;
    case CloseBracePlacement::kBodyColumn: close_column = body_column; break;
  }
  if (o.close_cuddled || o.close_column != *close_column) {
    return Mismatch{
        "close brace at column " + std::to_string(*close_column + 1),
        o.close_cuddled ? std::string(RelationName(CloseRelation::kCuddled))
                        : "close brace at column " +
                              std::to_string(o.close_column + 1)};
  }
  return std::nullopt;
}

}  // namespace internal

// One observation per braced block that belongs to a header.
inline std::vector<Observation> observe(const BlockTree& tree,
                                        std::string_view source) {
  std::vector<Observation> out;
  const internal::ColumnMap columns(source);
  internal::ObserveAll(tree.roots, columns, out);
  return out;
}

inline bool Consistent(const StyleSpec& style, const Observation& o) {
  return !internal::Inconsistency(style, o).has_value();
}

// Scores every built-in style by the fraction of observations it explains.
// The verdict is ambiguous with no evidence or a tie at the top.
inline StyleReport detect_style(std::string_view source,
                                std::string source_name = "<input>") {
  const BlockTree tree = parse_blocks(tokenize(source, std::move(source_name)));
  const std::vector<Observation> obs = observe(tree, source);
  StyleReport report;
  report.observations_total = static_cast<int>(obs.size());
  double top = -1.0;
  int top_count = 0;
  std::string top_name;
  for (std::string_view name : kStyleNames) {
    const StyleSpec style = builtin_style(name);
    const auto hits = std::count_if(obs.begin(), obs.end(),
                                    [&](const Observation& o) {
                                      return Consistent(style, o);
                                    });
    const double score =
        obs.empty() ? 0.0
                    : static_cast<double>(hits) / static_cast<double>(obs.size());
    report.scores[std::string(name)] = score;
    if (score > top) {
      top = score;
      top_count = 1;
      top_name = std::string(name);
    } else if (score == top) {
      ++top_count;
    }
  }
  if (obs.empty() || top_count > 1) return report;
  report.best = top_name;
  const StyleSpec best = builtin_style(top_name);
  for (const Observation& o : obs) {
    if (auto m = internal::Inconsistency(best, o)) {
      report.deviations.push_back({o.line, m->first, m->second});
    }
  }
  return report;
}

namespace internal {

inline std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    if (text[i] == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += text[i];
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

// Minimal line edit script (insert, delete, replace) turning `found` into
// `expected`; each edit becomes one deviation.
inline std::vector<Deviation> LineDiff(const std::vector<std::string>& expected,
                                       const std::vector<std::string>& found) {
  const std::size_t n = expected.size();
  const std::size_t m = found.size();
  std::vector<std::vector<int>> cost(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n || j == m) {
        cost[i][j] = static_cast<int>((n - i) + (m - j));
      } else if (expected[i] == found[j]) {
        cost[i][j] = cost[i + 1][j + 1];
      } else {
        cost[i][j] = 1 + std::min({cost[i + 1][j + 1], cost[i + 1][j],
                                   cost[i][j + 1]});
      }
    }
  }
  std::vector<Deviation> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const int line = static_cast<int>(j + 1);
    if (i < n && j < m && expected[i] == found[j]) {
      ++i, ++j;
    } else if (i < n && j < m && cost[i][j] == 1 + cost[i + 1][j + 1]) {
      out.push_back({line, expected[i++], found[j++]});
    } else if (j < m && (i == n || cost[i][j] == 1 + cost[i][j + 1])) {
      out.push_back({line, "", found[j++]});
    } else {
      out.push_back({line, expected[i++], ""});
    }
  }
  return out;
}

}  // namespace internal

// Lines where `source` differs from its own formatting. Empty exactly when
// formatting would leave the file unchanged.
inline std::vector<Deviation> check(std::string_view source,
                                    const StyleSpec& style,
                                    const FormatConfig& config,
                                    std::string source_name = "<input>") {
  const std::string formatted =
      format_source(source, style, config, std::move(source_name));
  return internal::LineDiff(internal::SplitLines(formatted),
                            internal::SplitLines(source));
}

}  // namespace indentor

#endif  // INDENTOR_DETECTOR_HPP_
