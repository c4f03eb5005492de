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

#ifndef INDENTOR_RENDER_HPP_
#define INDENTOR_RENDER_HPP_

#include <algorithm>
#include <climits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indentor/block_tree.hpp"
#include "indentor/lexer.hpp"
#include "indentor/style.hpp"
#include "indentor/token.hpp"

namespace indentor {

inline constexpr std::string_view kNullBodyComment = "/* null body */";

// One physical output line: `column` is the indentation in columns.
struct LaidOutLine {
  int column = 0;
  std::string text;
  bool verbatim = false;  // preprocessor line, always at column 0

  friend bool operator==(const LaidOutLine&, const LaidOutLine&) = default;
};

namespace internal {

inline constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

inline bool IsPunct(const Token& t, std::string_view text) {
  return t.kind == TokenKind::kPunct && t.text == text;
}

inline bool EndsOperand(const Token& t) {
  return t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kNumber ||
         t.kind == TokenKind::kStringLiteral ||
         t.kind == TokenKind::kCharLiteral ||
         t.kind == TokenKind::kCloseParen || IsPunct(t, "]") ||
         t.kind == TokenKind::kCloseBrace;
}

inline bool CanBeUnary(const Token& t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == "&" || t.text == "*" || t.text == "-" || t.text == "+" ||
          t.text == "!" || t.text == "~" || t.text == "++" ||
          t.text == "--");
}

// Whether a space goes before each token of a run laid out on one line.
// Unary/binary disambiguation is a purely local guess from the preceding
// token.
inline std::vector<bool> SpaceFlags(std::span<const Token> toks,
                                    bool space_before_call_paren) {
  std::vector<bool> flags(toks.size(), false);
  std::vector<bool> unary(toks.size(), false);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& cur = toks[i];
    const Token* prev = i > 0 ? &toks[i - 1] : nullptr;
    if (CanBeUnary(cur)) {
      unary[i] = cur.text == "!" || cur.text == "~" || prev == nullptr ||
                 !EndsOperand(*prev);
    }
    if (prev == nullptr) continue;
    bool space = true;
    if (cur.IsComment() || prev->IsComment()) {
      space = true;
    } else if (cur.kind == TokenKind::kSemicolon) {
      space = false;
    } else if (cur.kind == TokenKind::kComma ||
               cur.kind == TokenKind::kCloseParen || IsPunct(cur, "]")) {
      space = false;
    } else if (prev->kind == TokenKind::kOpenParen || IsPunct(*prev, "[")) {
      space = false;
    } else if (IsPunct(*prev, ".") || IsPunct(*prev, "->") ||
               IsPunct(*prev, "::") || IsPunct(cur, ".") ||
               IsPunct(cur, "->") || IsPunct(cur, "::")) {
      space = false;
    } else if (cur.kind == TokenKind::kOpenParen) {
      if (prev->kind == TokenKind::kIdentifier) {
        space = space_before_call_paren;
      } else if (prev->kind == TokenKind::kCloseParen || IsPunct(*prev, "]")) {
        space = false;
      } else {
        space = !(i > 0 && unary[i - 1]);
      }
    } else if (IsPunct(cur, "[")) {
      space = !EndsOperand(*prev);
    } else if (cur.kind == TokenKind::kOpenBrace) {
      space = prev->kind != TokenKind::kIdentifier &&
              prev->kind != TokenKind::kOpenBrace;
    } else if (prev->kind == TokenKind::kOpenBrace ||
               cur.kind == TokenKind::kCloseBrace) {
      space = false;
    } else if ((cur.text == "++" || cur.text == "--") && !unary[i]) {
      space = false;
    } else if (unary[i - 1]) {
      space = false;
    }
    // Never let two tokens fuse into a different one.
    if (!space && prev->kind == TokenKind::kPunct &&
        cur.kind == TokenKind::kPunct &&
        OperatorLength(prev->text + cur.text) > prev->text.size()) {
      space = true;
    }
    if (!space && prev->text == "/" && !cur.text.empty() &&
        (cur.text[0] == '*' || cur.text[0] == '/')) {
      space = true;
    }
    flags[i] = space;
  }
  return flags;
}

inline std::string NormalizeNewlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    }
    out += text[i];
  }
  return out;
}

inline std::string JoinRange(std::span<const Token> toks,
                             const std::vector<bool>& flags, std::size_t begin,
                             std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin && flags[i]) out += ' ';
    out += NormalizeNewlines(toks[i].text);
  }
  return out;
}

struct Segment {
  std::string text;
  bool lead_space = false;
  bool verbatim = false;
  bool ends_with_line_comment = false;
};

// Lays out a token run starting at `column`; later lines go to
// `continuation`. Breaks fall after commas at the shallowest nesting depth
// that has any, only when the line would exceed `max_width`. Line comments
// and preprocessor lines always force breaks.
inline std::vector<LaidOutLine> LayoutRun(std::span<const Token> toks,
                                          int column, int continuation,
                                          int max_width,
                                          bool space_before_call_paren) {
  std::vector<LaidOutLine> lines;
  if (toks.empty()) return lines;
  const std::vector<bool> flags = SpaceFlags(toks, space_before_call_paren);

  std::vector<int> depth(toks.size(), 0);
  int d = 0;
  int min_comma_depth = INT_MAX;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind == TokenKind::kCloseParen || IsPunct(t, "]") ||
        t.kind == TokenKind::kCloseBrace) {
      d = std::max(0, d - 1);
    }
    depth[i] = d;
    if (t.kind == TokenKind::kComma) {
      min_comma_depth = std::min(min_comma_depth, d);
    }
    if (t.kind == TokenKind::kOpenParen || IsPunct(t, "[") ||
        t.kind == TokenKind::kOpenBrace) {
      ++d;
    }
  }

  std::vector<Segment> segments;
  std::size_t seg_begin = 0;
  const auto close_segment = [&](std::size_t end) {
    if (end <= seg_begin) return;
    Segment s;
    s.text = JoinRange(toks, flags, seg_begin, end);
    s.lead_space = flags[seg_begin];
    s.ends_with_line_comment = toks[end - 1].kind == TokenKind::kLineComment;
    segments.push_back(std::move(s));
    seg_begin = end;
  };
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind == TokenKind::kPreprocessorLine) {
      close_segment(i);
      Segment s;
      s.text = NormalizeNewlines(t.text);
      s.verbatim = true;
      segments.push_back(std::move(s));
      seg_begin = i + 1;
      continue;
    }
    if (t.kind == TokenKind::kLineComment ||
        (t.kind == TokenKind::kComma && depth[i] == min_comma_depth)) {
      close_segment(i + 1);
    }
  }
  close_segment(toks.size());

  bool force_new = true;
  for (Segment& s : segments) {
    if (s.verbatim) {
      lines.push_back({0, std::move(s.text), true});
      force_new = true;
      continue;
    }
    if (force_new || lines.empty()) {
      lines.push_back({lines.empty() ? column : continuation,
                       std::move(s.text), false});
    } else {
      LaidOutLine& last = lines.back();
      std::string joined = last.text + (s.lead_space ? " " : "") + s.text;
      if (last.column + static_cast<int>(joined.size()) <= max_width) {
        last.text = std::move(joined);
      } else {
        lines.push_back({continuation, std::move(s.text), false});
      }
    }
    force_new = s.ends_with_line_comment;
  }
  return lines;
}

inline bool HasForcedBreak(std::span<const Token> toks) {
  return std::any_of(toks.begin(), toks.end(), [](const Token& t) {
    return t.kind == TokenKind::kLineComment ||
           t.kind == TokenKind::kPreprocessorLine;
  });
}

// Text of a run forced onto one line; empty optional when it cannot be.
inline std::optional<std::string> SingleLine(std::span<const Token> toks,
                                             bool space_before_call_paren) {
  if (HasForcedBreak(toks)) return std::nullopt;
  const auto flags = SpaceFlags(toks, space_before_call_paren);
  return JoinRange(toks, flags, 0, toks.size());
}

// Index of the `(` that opens a function's parameter list, or npos.
inline std::size_t FindParameterList(std::span<const Token> toks) {
  int depth = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind == TokenKind::kOpenParen) {
      if (depth == 0 && i > 0 &&
          (toks[i - 1].kind == TokenKind::kIdentifier ||
           IsPunct(toks[i - 1], "]") || IsPunct(toks[i - 1], ">"))) {
        return i;
      }
      ++depth;
    } else if (t.kind == TokenKind::kCloseParen) {
      depth = std::max(0, depth - 1);
    }
  }
  return kNpos;
}

inline std::size_t MatchingParen(std::span<const Token> toks,
                                 std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::kOpenParen) ++depth;
    if (toks[i].kind == TokenKind::kCloseParen && --depth == 0) return i;
  }
  return kNpos;
}

// A prototype such as `int f(int a, char b);`.
inline bool IsFunctionDeclaration(std::span<const Token> toks) {
  if (toks.size() < 4 || toks.back().kind != TokenKind::kSemicolon) {
    return false;
  }
  if (toks.front().kind != TokenKind::kIdentifier &&
      !toks.front().Is(TokenKind::kKeyword, "struct") &&
      !toks.front().Is(TokenKind::kKeyword, "class")) {
    return false;
  }
  const std::size_t open = FindParameterList(toks);
  if (open == internal::kNpos) return false;
  for (std::size_t i = 0; i < open; ++i) {
    if (IsPunct(toks[i], "=")) return false;
  }
  const std::size_t close = MatchingParen(toks, open);
  if (close == internal::kNpos) return false;
  for (std::size_t i = close + 1; i + 1 < toks.size(); ++i) {
    if (IsPunct(toks[i], "=") || IsPunct(toks[i], "->")) return true;
    if (!IsQualifier(toks[i])) return false;
  }
  return true;
}

}  // namespace internal

// Lays out a function header or prototype. It stays on one line when that
// fits; otherwise each parameter gets its own line, aligned just after the
// opening parenthesis.
inline std::vector<LaidOutLine> wrap_parameter_list(
    std::span<const Token> toks, const StyleSpec& style,
    const FormatConfig& config, int column = 0) {
  using internal::LayoutRun;
  const int continuation = column + config.indent_width;
  const auto fallback = [&] {
    return LayoutRun(toks, column, continuation, config.max_line_width,
                     style.space_before_call_paren);
  };
  const std::size_t open = internal::FindParameterList(toks);
  if (open == internal::kNpos ||
      internal::HasForcedBreak(toks)) {
    return fallback();
  }
  const std::size_t close = internal::MatchingParen(toks, open);
  if (close == internal::kNpos) return fallback();

  const auto flags = internal::SpaceFlags(toks, style.space_before_call_paren);
  const std::string whole = internal::JoinRange(toks, flags, 0, toks.size());
  if (column + static_cast<int>(whole.size()) <= config.max_line_width) {
    return {{column, whole, false}};
  }

  std::vector<std::pair<std::size_t, std::size_t>> params;
  int depth = 0;
  std::size_t begin = open + 1;
  for (std::size_t i = open + 1; i < close; ++i) {
    const Token& t = toks[i];
    if (t.kind == TokenKind::kOpenParen || internal::IsPunct(t, "[") ||
        t.kind == TokenKind::kOpenBrace) {
      ++depth;
    } else if (t.kind == TokenKind::kCloseParen ||
               internal::IsPunct(t, "]") ||
               t.kind == TokenKind::kCloseBrace) {
      --depth;
    } else if (t.kind == TokenKind::kComma && depth == 0) {
      params.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  params.emplace_back(begin, close);
  if (params.size() < 2) return fallback();

  const std::string prefix = internal::JoinRange(toks, flags, 0, open + 1);
  const int align = column + static_cast<int>(prefix.size());
  std::vector<LaidOutLine> lines;
  for (std::size_t p = 0; p < params.size(); ++p) {
    const auto [b, e] = params[p];
    const std::size_t end = p + 1 == params.size() ? toks.size() : e;
    std::string text = internal::JoinRange(toks, flags, b, end);
    if (p == 0) {
      lines.push_back({column, prefix + text, false});
    } else {
      lines.push_back({align, std::move(text), false});
    }
  }
  return lines;
}

namespace internal {

struct OutLine {
  int column = 0;
  std::string text;
  int level = -1;  // -1: blank line
  bool verbatim = false;
  bool ends_with_line_comment = false;
};

class Renderer {
 public:
  Renderer(const StyleSpec& style, const FormatConfig& config,
           const DepthMap& depths)
      : style_(style), config_(config), depths_(depths),
        unit_(config.indent_width) {}

  std::string Run(const BlockTree& tree) {
    EmitSequence(tree.roots, 0, SequenceContext{});
    return Assemble();
  }

 private:
  struct SequenceContext {
    bool declaration_level = true;
    bool is_switch = false;
    int label_column = 0;
    int statement_column = 0;
    int access_column = 0;
  };

  int Level(const Node& n) const {
    auto it = depths_.find(&n);
    return it == depths_.end() ? 0 : it->second;
  }

  bool CanAppend() const {
    if (lines_.empty()) return false;
    const OutLine& last = lines_.back();
    return last.level >= 0 && !last.verbatim && !last.ends_with_line_comment &&
           !last.text.empty();
  }

  void Append(std::string_view text, bool line_comment = false) {
    lines_.back().text += text;
    lines_.back().ends_with_line_comment = line_comment;
    just_closed_ = nullptr;
  }

  void NewLine(int column, std::string text, int level,
               bool line_comment = false, bool verbatim = false) {
    lines_.push_back({verbatim ? 0 : column, std::move(text), level, verbatim,
                      line_comment});
    just_closed_ = nullptr;
  }

  void EmitLines(const std::vector<LaidOutLine>& laid, int level,
                 bool ends_with_line_comment) {
    for (std::size_t i = 0; i < laid.size(); ++i) {
      const bool last = i + 1 == laid.size();
      NewLine(laid[i].column, laid[i].text, level,
              last && ends_with_line_comment, laid[i].verbatim);
    }
  }

  static bool EndsWithLineComment(std::span<const Token> toks) {
    return !toks.empty() && toks.back().kind == TokenKind::kLineComment;
  }

  std::vector<LaidOutLine> Layout(std::span<const Token> toks, int column) {
    return LayoutRun(toks, column, column + unit_, config_.max_line_width,
                     style_.space_before_call_paren);
  }

  void EmitBlankIfWanted(const Node& node, bool first) {
    if (!node.blank_line_before || first || lines_.empty()) return;
    if (lines_.back().level < 0) return;
    lines_.push_back({});
    just_closed_ = nullptr;
  }

  void EmitSequence(const std::vector<Node>& nodes, int column,
                    const SequenceContext& ctx, std::size_t start = 0) {
    const Node* prev = start > 0 ? &nodes[start - 1] : nullptr;
    bool after_label = false;
    for (std::size_t i = start; i < nodes.size(); ++i) {
      const Node& node = nodes[i];
      int col = column;
      if (ctx.is_switch) {
        if (node.is<Label>()) {
          col = ctx.label_column;
          after_label = true;
        } else if (after_label) {
          col = ctx.statement_column;
        } else {
          col = ctx.label_column;
        }
      }
      if (const auto* label = node.get_if<Label>();
          label != nullptr && label->kind == HeaderKind::kAccessLabel) {
        col = ctx.access_column;
      }
      if (!WillCuddle(node, prev)) EmitBlankIfWanted(node, prev == nullptr);
      EmitNode(node, col, ctx.declaration_level, prev);
      prev = &node;
    }
  }

  // Else/catch links join the preceding `}` line in cuddling styles.
  bool WillCuddle(const Node& node, const Node* prev) const {
    const auto* h = node.get_if<Header>();
    if (h == nullptr || prev == nullptr || !style_.CuddlesElse()) return false;
    if (h->kind != HeaderKind::kElse && h->kind != HeaderKind::kElseIf &&
        h->kind != HeaderKind::kCatch) {
      return false;
    }
    const auto* ph = prev->get_if<Header>();
    if (ph == nullptr || !ph->body || !ph->body->is<Block>()) return false;
    return just_closed_ == &ph->body->as<Block>() && CanAppend();
  }

  void EmitNode(const Node& node, int column, bool declaration_level,
                const Node* prev) {
    const int level = Level(node);
    if (const auto* c = node.get_if<Comment>()) {
      const bool line_comment = c->token.kind == TokenKind::kLineComment;
      const std::string text = NormalizeNewlines(c->token.text);
      if (c->trailing && CanAppend()) {
        Append(" " + text, line_comment);
      } else {
        NewLine(column, text, level, line_comment);
      }
    } else if (const auto* p = node.get_if<Preprocessor>()) {
      NewLine(0, NormalizeNewlines(p->token.text), level, false, true);
    } else if (const auto* l = node.get_if<Label>()) {
      NewLine(column, LabelText(*l), level);
    } else if (const auto* s = node.get_if<Statement>()) {
      EmitStatement(*s, column, level, declaration_level);
    } else if (const auto* b = node.get_if<Block>()) {
      EmitBlock(*b, column, BracePlacement::kNextLineHeaderColumn, level,
                HeaderKind::kIf, false, /*plain=*/true);
    } else if (const auto* ch = node.get_if<Chain>()) {
      SequenceContext ctx;
      ctx.declaration_level = false;
      ctx.access_column = column;
      EmitSequence(ch->links, column, ctx);
    } else {
      EmitHeader(node.as<Header>(), column, level, declaration_level,
                 WillCuddle(node, prev));
    }
  }

  // Labels print with no space before their colon.
  std::string LabelText(const Label& l) const {
    std::vector<bool> flags =
        SpaceFlags(l.tokens, style_.space_before_call_paren);
    if (!flags.empty() && l.tokens.back().kind == TokenKind::kColon) {
      flags.back() = false;
    }
    return JoinRange(l.tokens, flags, 0, l.tokens.size());
  }

  void EmitStatement(const Statement& s, int column, int level,
                     bool declaration_level) {
    if (s.tokens.empty()) return;
    if (s.null_body) {
      NewLine(column, NullBodyText(s), level);
      return;
    }
    std::vector<LaidOutLine> laid;
    if (declaration_level && IsFunctionDeclaration(s.tokens)) {
      laid = wrap_parameter_list(s.tokens, style_, config_, column);
    } else {
      laid = Layout(s.tokens, column);
    }
    EmitLines(laid, level, EndsWithLineComment(s.tokens));
  }

  std::string NullBodyText(const Statement& s) const {
    const bool has_comment =
        std::any_of(s.tokens.begin(), s.tokens.end(),
                    [](const Token& t) { return t.IsComment(); });
    if (!has_comment && config_.null_body_comment) {
      return std::string(kNullBodyComment) + " ;";
    }
    std::string out;
    for (const Token& t : s.tokens) {
      if (!out.empty()) out += ' ';
      out += NormalizeNewlines(t.text);
    }
    return out;
  }

  BracePlacement PlacementFor(HeaderKind kind) const {
    switch (kind) {
      case HeaderKind::kFunctionDef: return style_.function_brace;
      case HeaderKind::kClassDef: return style_.class_brace;
      case HeaderKind::kDoWhile:
        if (style_.control_brace == BracePlacement::kSameLine &&
            !config_.do_while_cuddle) {
          return BracePlacement::kNextLineHeaderColumn;
        }
        return style_.control_brace;
      default: return style_.control_brace;
    }
  }

  bool TryOneLineFunction(const Header& h, int column, int level) {
    if (h.kind != HeaderKind::kFunctionDef || !style_.short_function_one_line ||
        !h.body || !h.body->is<Block>()) {
      return false;
    }
    const Block& block = h.body->as<Block>();
    if (block.children.size() > 1) return false;
    const auto header = SingleLine(h.tokens, style_.space_before_call_paren);
    if (!header) return false;
    std::string text = *header + " {";
    if (!block.children.empty()) {
      const auto* s = block.children.front().get_if<Statement>();
      if (s == nullptr || s->tokens.empty()) return false;
      const auto body = SingleLine(s->tokens, style_.space_before_call_paren);
      if (!body) return false;
      text += " " + *body;
    }
    text += " }";
    if (column + static_cast<int>(text.size()) > config_.max_line_width) {
      return false;
    }
    NewLine(column, std::move(text), level);
    return true;
  }

  void EmitHeader(const Header& h, int column, int level,
                  bool declaration_level, bool cuddle) {
    if (TryOneLineFunction(h, column, level)) return;
    std::vector<LaidOutLine> laid =
        h.kind == HeaderKind::kFunctionDef
            ? wrap_parameter_list(h.tokens, style_, config_, column)
            : Layout(h.tokens, column);
    const bool header_comment = EndsWithLineComment(h.tokens);
    if (cuddle && !laid.empty()) {
      Append(" " + laid.front().text, laid.size() == 1 && header_comment);
      laid.erase(laid.begin());
    }
    EmitLines(laid, level, header_comment);

    bool body_on_header_line = false;
    if (h.body) {
      const Node& body = *h.body;
      if (const auto* block = body.get_if<Block>()) {
        EmitBlock(*block, column, PlacementFor(h.kind), level, h.kind,
                  h.kind == HeaderKind::kClassDef && declaration_level);
      } else if (const auto* s = body.get_if<Statement>()) {
        body_on_header_line = EmitSimpleBody(*s, column, level);
      } else {
        EmitNode(body, column + unit_, false, nullptr);
      }
    }
    EmitTrailer(h, column, level, body_on_header_line);
  }

  // Braceless single-statement body. Returns true when it went on the
  // header's line.
  bool EmitSimpleBody(const Statement& s, int column, int level) {
    if (s.tokens.empty()) return false;
    if (!s.null_body &&
        config_.simple_body_policy == SimpleBodyPolicy::kSameLine &&
        CanAppend()) {
      const auto text = SingleLine(s.tokens, style_.space_before_call_paren);
      const OutLine& last = lines_.back();
      if (text && last.column + static_cast<int>(last.text.size() + 1 +
                                                 text->size()) <=
                      config_.max_line_width) {
        Append(" " + *text);
        return true;
      }
    }
    EmitStatement(s, column + unit_, level + 1, false);
    return false;
  }

  void EmitTrailer(const Header& h, int column, int level,
                   bool body_on_header_line) {
    if (h.trailer.empty()) return;
    const auto text = SingleLine(h.trailer, style_.space_before_call_paren);
    const bool block_body = h.body && h.body->is<Block>();
    const bool fits =
        text && !lines_.empty() &&
        lines_.back().column + static_cast<int>(lines_.back().text.size() +
                                                1 + text->size()) <=
            config_.max_line_width;
    if (text && CanAppend() && (block_body || (body_on_header_line && fits))) {
      const bool glue = h.trailer.front().kind == TokenKind::kSemicolon;
      Append((glue ? "" : " ") + *text);
      return;
    }
    EmitLines(Layout(h.trailer, column), level, EndsWithLineComment(h.trailer));
  }

  void EmitBlock(const Block& block, int header_column,
                 BracePlacement placement, int level, HeaderKind kind,
                 bool members_are_declarations, bool plain = false) {
    int brace_column = header_column;
    bool own_line = true;
    if (placement == BracePlacement::kSameLine && CanAppend()) {
      Append(" {");
      own_line = false;
    } else if (placement == BracePlacement::kNextLineIndented) {
      brace_column += style_.brace_extra_indent.Resolve(unit_);
    }
    const int anchor = style_.body_relative_to == BodyAnchor::kHeader
                           ? header_column
                           : brace_column;
    int offset = style_.body_offset.Resolve(unit_);
    if (plain && offset == 0) offset = unit_;  // a bare block still nests
    const int body_column = anchor + offset;
    const bool cuddle_close =
        style_.close_brace == CloseBracePlacement::kCuddleLastStatement;

    SequenceContext ctx;
    ctx.declaration_level = members_are_declarations;
    ctx.access_column = header_column;
    ctx.is_switch = kind == HeaderKind::kSwitch;
    if (ctx.is_switch) {
      if (config_.switch_scheme == SwitchScheme::kCasesIndented) {
        ctx.label_column = body_column;
        ctx.statement_column = body_column + unit_;
      } else {
        ctx.label_column = header_column;
        ctx.statement_column = body_column;
      }
    }

    std::size_t first = 0;
    if (own_line) {
      const Statement* lead = nullptr;
      if (!block.children.empty()) {
        lead = block.children.front().get_if<Statement>();
      }
      const bool share = style_.statement_on_open_brace_line && lead &&
                         !lead->tokens.empty() && !lead->null_body &&
                         !ctx.is_switch && body_column - brace_column >= 2 &&
                         !HasPreprocessor(lead->tokens);
      if (share) {
        std::vector<LaidOutLine> laid = Layout(lead->tokens, body_column);
        laid.front().text =
            "{" + std::string(body_column - brace_column - 1, ' ') +
            laid.front().text;
        laid.front().column = brace_column;
        EmitLines(laid, Level(block.children.front()),
                  EndsWithLineComment(lead->tokens));
        first = 1;
      } else {
        NewLine(brace_column, "{", level);
      }
    }

    EmitSequence(block.children, body_column, ctx, first);

    if (cuddle_close) {
      if (CanAppend()) {
        Append(" }");
      } else {
        NewLine(block.children.empty() ? brace_column : body_column, "}",
                level);
      }
    } else {
      int close_column = header_column;
      if (style_.close_brace == CloseBracePlacement::kBraceColumn) {
        close_column = brace_column;
      } else if (style_.close_brace == CloseBracePlacement::kBodyColumn) {
        close_column = body_column;
      }
      NewLine(close_column, "}", level);
    }
    just_closed_ = &block;
  }

  static bool HasPreprocessor(std::span<const Token> toks) {
    return std::any_of(toks.begin(), toks.end(), [](const Token& t) {
      return t.kind == TokenKind::kPreprocessorLine;
    });
  }

  std::string Indentation(int column) const {
    if (!config_.use_tabs) return std::string(column, ' ');
    return std::string(column / unit_, '\t') +
           std::string(column % unit_, ' ');
  }

  std::string Assemble() const {
    std::string out;
    for (const OutLine& line : lines_) {
      if (line.level >= 0) {
        if (config_.annotate_levels) {
          out += "[" + std::to_string(line.level) + "] ";
        }
        out += Indentation(line.column);
        out += line.text;
      }
      out += '\n';
    }
    return out;
  }

  const StyleSpec& style_;
  const FormatConfig& config_;
  const DepthMap& depths_;
  const int unit_;
  std::vector<OutLine> lines_;
  const Block* just_closed_ = nullptr;
};

}  // namespace internal

// Lays out a block tree. The result ends in exactly one newline, or is
// empty for an empty tree.
inline std::string render(const BlockTree& tree, const StyleSpec& style,
                          const FormatConfig& config) {
  Validate(config);
  const DepthMap depths = depth_map(tree);
  return internal::Renderer(style, config, depths).Run(tree);
}

inline std::string format_source(std::string_view source,
                                 const StyleSpec& style,
                                 const FormatConfig& config,
                                 std::string source_name = "<input>") {
  return render(parse_blocks(significant(tokenize(source, std::move(source_name)))),
                style, config);
}

}  // namespace indentor

#endif  // INDENTOR_RENDER_HPP_
