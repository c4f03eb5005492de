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

#ifndef INDENTOR_BLOCK_TREE_HPP_
#define INDENTOR_BLOCK_TREE_HPP_

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <type_traits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "indentor/lexer.hpp"
#include "indentor/token.hpp"

namespace indentor {

enum class HeaderKind {
  kFunctionDef,
  kClassDef,  // also namespaces, enums, unions and extern blocks
  kIf,
  kElseIf,
  kElse,
  kWhile,
  kFor,
  kDoWhile,
  kSwitch,
  kTry,
  kCatch,
  kCaseLabel,
  kDefaultLabel,
  kAccessLabel,
};

inline std::string_view HeaderKindName(HeaderKind kind) {
  switch (kind) {
    case HeaderKind::kFunctionDef: return "function";
    case HeaderKind::kClassDef: return "class";
    case HeaderKind::kIf: return "if";
    case HeaderKind::kElseIf: return "else-if";
    case HeaderKind::kElse: return "else";
    case HeaderKind::kWhile: return "while";
    case HeaderKind::kFor: return "for";
    case HeaderKind::kDoWhile: return "do-while";
    case HeaderKind::kSwitch: return "switch";
    case HeaderKind::kTry: return "try";
    case HeaderKind::kCatch: return "catch";
    case HeaderKind::kCaseLabel: return "case";
    case HeaderKind::kDefaultLabel: return "default";
    case HeaderKind::kAccessLabel: return "access";
  }
  return "?";
}

struct Node;

// A control or definition header owning a body. `trailer` holds the
// `while (...);` of a do-while or the declarators/`;` after a class body.
struct Header {
  HeaderKind kind = HeaderKind::kIf;
  std::vector<Token> tokens;
  std::unique_ptr<Node> body;
  std::vector<Token> trailer;
};

struct Block {
  Token open;
  std::vector<Node> children;
  Token close;
};

// A token run, normally ending at its semicolon. `null_body` marks the
// empty body of a for/while loop (`;`, possibly preceded by comments).
struct Statement {
  std::vector<Token> tokens;
  bool null_body = false;
};

struct Label {
  HeaderKind kind = HeaderKind::kCaseLabel;
  std::vector<Token> tokens;
};

// `trailing` is set when the comment shares a source line with the token
// before it.
struct Comment {
  Token token;
  bool trailing = false;
};

struct Preprocessor {
  Token token;
};

// An if/else-if/else or try/catch chain standing in a braceless body slot.
// At sequence level the links are plain siblings instead.
struct Chain {
  std::vector<Node> links;
};

struct Node {
  std::variant<Header, Block, Statement, Label, Comment, Preprocessor, Chain>
      value;
  bool blank_line_before = false;

  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, Node>)
  Node(T v) : value(std::move(v)) {}  // NOLINT(runtime/explicit)

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(value);
  }
  template <typename T>
  T& as() {
    return std::get<T>(value);
  }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&value);
  }
};

struct BlockTree {
  std::vector<Node> roots;
  std::string source_name;
};

inline bool IsHeaderOf(const Node& node, HeaderKind kind) {
  const auto* h = node.get_if<Header>();
  return h != nullptr && h->kind == kind;
}

// First and last source token of a node; nullptr for an empty node.
inline const Token* FirstToken(const Node& node) {
  return std::visit(
      [](const auto& n) -> const Token* {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Header>) {
          if (!n.tokens.empty()) return &n.tokens.front();
          if (n.body) return FirstToken(*n.body);
          return n.trailer.empty() ? nullptr : &n.trailer.front();
        } else if constexpr (std::is_same_v<T, Block>) {
          return &n.open;
        } else if constexpr (std::is_same_v<T, Statement> ||
                             std::is_same_v<T, Label>) {
          return n.tokens.empty() ? nullptr : &n.tokens.front();
        } else if constexpr (std::is_same_v<T, Chain>) {
          for (const Node& link : n.links) {
            if (const Token* t = FirstToken(link)) return t;
          }
          return nullptr;
        } else {
          return &n.token;
        }
      },
      node.value);
}

inline const Token* LastToken(const Node& node) {
  return std::visit(
      [](const auto& n) -> const Token* {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Header>) {
          if (!n.trailer.empty()) return &n.trailer.back();
          if (n.body) {
            if (const Token* t = LastToken(*n.body)) return t;
          }
          return n.tokens.empty() ? nullptr : &n.tokens.back();
        } else if constexpr (std::is_same_v<T, Block>) {
          return &n.close;
        } else if constexpr (std::is_same_v<T, Statement> ||
                             std::is_same_v<T, Label>) {
          return n.tokens.empty() ? nullptr : &n.tokens.back();
        } else if constexpr (std::is_same_v<T, Chain>) {
          for (auto it = n.links.rbegin(); it != n.links.rend(); ++it) {
            if (const Token* t = LastToken(*it)) return t;
          }
          return nullptr;
        } else {
          return &n.token;
        }
      },
      node.value);
}

namespace internal {

inline bool IsQualifier(const Token& t) {
  static constexpr std::array<std::string_view, 8> kQualifiers = {
      "const", "override", "final", "noexcept",
      "volatile", "mutable", "try", "throw"};
  if (t.kind == TokenKind::kIdentifier) {
    return std::find(kQualifiers.begin(), kQualifiers.end(), t.text) !=
           kQualifiers.end();
  }
  return t.Is(TokenKind::kPunct, "&") || t.Is(TokenKind::kPunct, "&&");
}

inline bool IsAggregateIntroducer(const Token& t) {
  return t.Is(TokenKind::kKeyword, "class") ||
         t.Is(TokenKind::kKeyword, "struct") ||
         (t.kind == TokenKind::kIdentifier &&
          (t.text == "enum" || t.text == "union" || t.text == "namespace" ||
           t.text == "extern"));
}

inline bool TakesDeclarators(const std::vector<Token>& run) {
  for (const Token& t : run) {
    if (t.Is(TokenKind::kKeyword, "class") ||
        t.Is(TokenKind::kKeyword, "struct") ||
        t.Is(TokenKind::kIdentifier, "enum") ||
        t.Is(TokenKind::kIdentifier, "union")) {
      return true;
    }
  }
  return false;
}

enum class Opener { kFunction, kAggregate, kBraceInit };

// Decides what an OpenBrace at statement level means, given the tokens
// accumulated before it.
inline Opener ClassifyOpener(const std::vector<Token>& run) {
  int depth = 0;
  std::ptrdiff_t last_close = -1;
  bool top_level_assign = false;
  bool aggregate = false;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Token& t = run[i];
    if (t.kind == TokenKind::kOpenParen) ++depth;
    if (t.kind == TokenKind::kCloseParen) {
      depth = std::max(0, depth - 1);
      if (depth == 0) last_close = static_cast<std::ptrdiff_t>(i);
    }
    if (depth == 0 && t.Is(TokenKind::kPunct, "=")) top_level_assign = true;
    if (depth == 0 && IsAggregateIntroducer(t)) aggregate = true;
  }
  if (last_close >= 0) {
    const auto tail_begin = run.begin() + last_close + 1;
    const bool all_qualifiers =
        std::all_of(tail_begin, run.end(), IsQualifier);
    const bool trailing_return =
        tail_begin != run.end() && tail_begin->Is(TokenKind::kPunct, "->");
    const bool ctor_init =
        run.back().kind == TokenKind::kCloseBrace &&
        std::any_of(tail_begin, run.end(), [](const Token& t) {
          return t.kind == TokenKind::kColon;
        });
    if (all_qualifiers || trailing_return || ctor_init) {
      return Opener::kFunction;
    }
  }
  if (aggregate && !top_level_assign) return Opener::kAggregate;
  if (top_level_assign) return Opener::kBraceInit;
  const Token& last = run.back();
  if (run.front().Is(TokenKind::kKeyword, "return")) return Opener::kBraceInit;
  if (last.kind == TokenKind::kIdentifier && run.size() >= 2) {
    return Opener::kBraceInit;
  }
  if (last.kind == TokenKind::kPunct || last.kind == TokenKind::kComma ||
      last.kind == TokenKind::kOpenParen) {
    return Opener::kBraceInit;
  }
  return Opener::kAggregate;
}

class Parser {
 public:
  explicit Parser(const TokenStream& ts) : name_(ts.source_name) {
    for (const Token& t : ts.tokens) {
      if (t.kind != TokenKind::kNewline) toks_.push_back(t);
    }
  }

  BlockTree Run() {
    BlockTree tree;
    tree.source_name = name_;
    tree.roots = ParseSequence(nullptr);
    return tree;
  }

 private:
  bool AtEnd() const { return pos_ >= toks_.size(); }
  const Token& Cur() const { return toks_[pos_]; }
  const Token* PeekAt(std::size_t i) const {
    return i < toks_.size() ? &toks_[i] : nullptr;
  }
  bool CurIs(TokenKind k) const { return !AtEnd() && Cur().kind == k; }
  bool CurIs(TokenKind k, std::string_view text) const {
    return !AtEnd() && Cur().Is(k, text);
  }

  [[noreturn]] void Fail(ErrorKind kind, const Token& at,
                         const std::string& message) const {
    throw SourceError(kind, name_, at.line, at.column, message);
  }

  std::vector<Node> ParseSequence(const Token* open) {
    std::vector<Node> nodes;
    while (true) {
      if (AtEnd()) {
        if (open != nullptr) {
          Fail(ErrorKind::kUnbalancedBraces, *open, "unclosed '{'");
        }
        break;
      }
      if (Cur().kind == TokenKind::kCloseBrace) {
        if (open != nullptr) break;
        Fail(ErrorKind::kUnexpectedCloseBrace, Cur(),
             "'}' without matching '{'");
      }
      if (CurIs(TokenKind::kKeyword, "else")) {
        Fail(ErrorKind::kElseWithoutIf, Cur(), "'else' without matching 'if'");
      }
      if (CurIs(TokenKind::kKeyword, "if")) {
        ParseIfChain(nodes);
      } else if (StartsTry()) {
        ParseTryChain(nodes);
      } else {
        nodes.push_back(ParseNode());
      }
    }
    MarkBlankLines(nodes);
    return nodes;
  }

  static void MarkBlankLines(std::vector<Node>& nodes) {
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const Token* prev = LastToken(nodes[i - 1]);
      const Token* first = FirstToken(nodes[i]);
      if (prev != nullptr && first != nullptr &&
          first->line - prev->EndLine() >= 2) {
        nodes[i].blank_line_before = true;
      }
    }
  }

  Node ParseNode() {
    const Token& tok = Cur();
    switch (tok.kind) {
      case TokenKind::kLineComment:
      case TokenKind::kBlockComment: {
        Comment c{tok, pos_ > 0 && tok.line == toks_[pos_ - 1].EndLine()};
        ++pos_;
        return Node(std::move(c));
      }
      case TokenKind::kPreprocessorLine:
        ++pos_;
        return Node(Preprocessor{tok});
      case TokenKind::kOpenBrace:
        return Node(ParseBlock());
      default:
        break;
    }
    if (tok.kind == TokenKind::kKeyword) {
      if (tok.text == "while") return ParseControl(HeaderKind::kWhile);
      if (tok.text == "for") return ParseControl(HeaderKind::kFor);
      if (tok.text == "switch") return ParseControl(HeaderKind::kSwitch);
      if (tok.text == "do") return ParseDo();
      if (tok.text == "case") {
        if (auto label = TryParseCaseLabel()) return std::move(*label);
      }
      if (tok.text == "default" && NextIs(TokenKind::kColon)) {
        return ParseShortLabel(HeaderKind::kDefaultLabel);
      }
    }
    if (tok.kind == TokenKind::kIdentifier &&
        (tok.text == "public" || tok.text == "private" ||
         tok.text == "protected") &&
        NextIs(TokenKind::kColon)) {
      return ParseShortLabel(HeaderKind::kAccessLabel);
    }
    return ParseStatementOrDefinition();
  }

  bool NextIs(TokenKind k) const {
    const Token* next = PeekAt(pos_ + 1);
    return next != nullptr && next->kind == k;
  }

  bool StartsTry() const {
    return CurIs(TokenKind::kIdentifier, "try") &&
           NextIs(TokenKind::kOpenBrace);
  }

  Block ParseBlock() {
    Block block;
    block.open = Cur();
    ++pos_;
    block.children = ParseSequence(&block.open);
    block.close = Cur();
    ++pos_;
    return block;
  }

  // Appends a balanced `( ... )` group. Braces inside are carried along;
  // a stray `}` ends the group early.
  void TakeParenGroup(std::vector<Token>& out) {
    if (!CurIs(TokenKind::kOpenParen)) return;
    int parens = 0;
    int braces = 0;
    while (!AtEnd()) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kCloseBrace && braces == 0) return;
      if (t.kind == TokenKind::kOpenParen) ++parens;
      if (t.kind == TokenKind::kCloseParen) --parens;
      if (t.kind == TokenKind::kOpenBrace) ++braces;
      if (t.kind == TokenKind::kCloseBrace) --braces;
      out.push_back(t);
      ++pos_;
      if (parens == 0) return;
    }
  }

  void TakeConditionHeader(std::vector<Token>& out) {
    while (CurIs(TokenKind::kIdentifier)) {  // e.g. `if constexpr`
      out.push_back(Cur());
      ++pos_;
    }
    TakeParenGroup(out);
  }

  Node ParseControl(HeaderKind kind) {
    Header h;
    h.kind = kind;
    h.tokens.push_back(Cur());
    ++pos_;
    TakeConditionHeader(h.tokens);
    h.body = std::make_unique<Node>(ParseBody(h));
    return Node(std::move(h));
  }

  Node ParseBody(Header& h) {
    std::size_t j = pos_;
    while (j < toks_.size() && toks_[j].IsComment()) ++j;
    const bool loop = h.kind == HeaderKind::kFor ||
                      h.kind == HeaderKind::kWhile;
    if (loop && j < toks_.size() && toks_[j].kind == TokenKind::kSemicolon) {
      Statement s;
      s.tokens.assign(toks_.begin() + static_cast<std::ptrdiff_t>(pos_),
                      toks_.begin() + static_cast<std::ptrdiff_t>(j + 1));
      s.null_body = true;
      pos_ = j + 1;
      return Node(std::move(s));
    }
    for (; pos_ < j; ++pos_) h.tokens.push_back(Cur());
    if (AtEnd() || Cur().kind == TokenKind::kCloseBrace) {
      return Node(Statement{});
    }
    if (Cur().kind == TokenKind::kOpenBrace) return Node(ParseBlock());
    if (Cur().kind == TokenKind::kSemicolon) {
      Statement s;
      s.tokens.push_back(Cur());
      ++pos_;
      return Node(std::move(s));
    }
    if (CurIs(TokenKind::kKeyword, "else")) {
      Fail(ErrorKind::kElseWithoutIf, Cur(), "'else' without matching 'if'");
    }
    if (CurIs(TokenKind::kKeyword, "if") || StartsTry()) {
      Chain chain;
      if (CurIs(TokenKind::kKeyword, "if")) {
        ParseIfChain(chain.links);
      } else {
        ParseTryChain(chain.links);
      }
      MarkBlankLines(chain.links);
      if (chain.links.size() == 1) return std::move(chain.links.front());
      return Node(std::move(chain));
    }
    return ParseNode();
  }

  // Moves any comments sitting before a continuation keyword into `out`
  // and reports whether the keyword follows. Nothing is consumed otherwise.
  template <typename Pred>
  bool ContinuesWith(std::vector<Node>& out, Pred pred) {
    std::size_t j = pos_;
    while (j < toks_.size() && toks_[j].IsComment()) ++j;
    if (j >= toks_.size() || !pred(toks_[j])) return false;
    while (pos_ < j) out.push_back(ParseNode());
    return true;
  }

  void ParseIfChain(std::vector<Node>& out) {
    {
      Header h;
      h.kind = HeaderKind::kIf;
      h.tokens.push_back(Cur());
      ++pos_;
      TakeConditionHeader(h.tokens);
      h.body = std::make_unique<Node>(ParseBody(h));
      out.emplace_back(std::move(h));
    }
    const auto is_else = [](const Token& t) {
      return t.Is(TokenKind::kKeyword, "else");
    };
    while (ContinuesWith(out, is_else)) {
      Header h;
      h.tokens.push_back(Cur());
      ++pos_;
      const bool else_if = CurIs(TokenKind::kKeyword, "if");
      h.kind = else_if ? HeaderKind::kElseIf : HeaderKind::kElse;
      if (else_if) {
        h.tokens.push_back(Cur());
        ++pos_;
        TakeConditionHeader(h.tokens);
      }
      h.body = std::make_unique<Node>(ParseBody(h));
      out.emplace_back(std::move(h));
      if (!else_if) break;
    }
  }

  void ParseTryChain(std::vector<Node>& out) {
    {
      Header h;
      h.kind = HeaderKind::kTry;
      h.tokens.push_back(Cur());
      ++pos_;
      h.body = std::make_unique<Node>(ParseBlock());
      out.emplace_back(std::move(h));
    }
    const auto is_catch = [](const Token& t) {
      return t.Is(TokenKind::kIdentifier, "catch");
    };
    while (ContinuesWith(out, is_catch)) {
      Header h;
      h.kind = HeaderKind::kCatch;
      h.tokens.push_back(Cur());
      ++pos_;
      TakeParenGroup(h.tokens);
      h.body = std::make_unique<Node>(ParseBody(h));
      out.emplace_back(std::move(h));
    }
  }

  Node ParseDo() {
    const Token& do_token = Cur();
    Header h;
    h.kind = HeaderKind::kDoWhile;
    h.tokens.push_back(do_token);
    ++pos_;
    h.body = std::make_unique<Node>(ParseBody(h));
    while (!AtEnd() && Cur().IsComment()) {
      h.trailer.push_back(Cur());
      ++pos_;
    }
    if (!CurIs(TokenKind::kKeyword, "while")) {
      Fail(ErrorKind::kMalformedDoWhile, do_token,
           "'do' body not followed by 'while'");
    }
    h.trailer.push_back(Cur());
    ++pos_;
    TakeParenGroup(h.trailer);
    while (!AtEnd() && Cur().kind != TokenKind::kSemicolon &&
           Cur().kind != TokenKind::kOpenBrace &&
           Cur().kind != TokenKind::kCloseBrace) {
      h.trailer.push_back(Cur());
      ++pos_;
    }
    if (!CurIs(TokenKind::kSemicolon)) {
      Fail(ErrorKind::kMalformedDoWhile, do_token,
           "'do ... while (...)' not terminated by ';'");
    }
    h.trailer.push_back(Cur());
    ++pos_;
    return Node(std::move(h));
  }

  std::optional<Node> TryParseCaseLabel() {
    Label label;
    label.kind = HeaderKind::kCaseLabel;
    std::size_t j = pos_;
    int depth = 0;
    while (j < toks_.size()) {
      const Token& t = toks_[j];
      if (t.kind == TokenKind::kOpenParen) ++depth;
      if (t.kind == TokenKind::kCloseParen) --depth;
      if (t.kind == TokenKind::kSemicolon || t.kind == TokenKind::kOpenBrace ||
          t.kind == TokenKind::kCloseBrace) {
        return std::nullopt;
      }
      label.tokens.push_back(t);
      ++j;
      if (t.kind == TokenKind::kColon && depth == 0) {
        pos_ = j;
        return Node(std::move(label));
      }
    }
    return std::nullopt;
  }

  Node ParseShortLabel(HeaderKind kind) {
    Label label;
    label.kind = kind;
    label.tokens.push_back(Cur());
    label.tokens.push_back(toks_[pos_ + 1]);
    pos_ += 2;
    return Node(std::move(label));
  }

  void TakeBalancedBraces(std::vector<Token>& out) {
    const Token& open = Cur();
    int depth = 0;
    while (!AtEnd()) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kOpenBrace) ++depth;
      if (t.kind == TokenKind::kCloseBrace) --depth;
      out.push_back(t);
      ++pos_;
      if (depth == 0) return;
    }
    Fail(ErrorKind::kUnbalancedBraces, open, "unclosed '{'");
  }

  static bool EndsSemicolonlessRun(const Token& t) {
    if (t.kind != TokenKind::kKeyword) return false;
    return t.text == "if" || t.text == "while" || t.text == "for" ||
           t.text == "do" || t.text == "switch" || t.text == "else" ||
           t.text == "case";
  }

  Node ParseStatementOrDefinition() {
    std::vector<Token> run;
    int depth = 0;
    while (!AtEnd()) {
      const Token& t = Cur();
      if (depth == 0) {
        if (t.kind == TokenKind::kSemicolon) {
          run.push_back(t);
          ++pos_;
          break;
        }
        if (t.kind == TokenKind::kCloseBrace) break;
        if (t.kind == TokenKind::kOpenBrace && !run.empty()) {
          const Opener opener = ClassifyOpener(run);
          if (opener == Opener::kFunction) {
            return MakeDefinition(HeaderKind::kFunctionDef, std::move(run));
          }
          if (opener == Opener::kAggregate) {
            return MakeDefinition(HeaderKind::kClassDef, std::move(run));
          }
          TakeBalancedBraces(run);
          continue;
        }
        if (!run.empty() && EndsSemicolonlessRun(t)) break;
      }
      if (t.kind == TokenKind::kOpenBrace) {
        TakeBalancedBraces(run);
        continue;
      }
      if (t.kind == TokenKind::kCloseBrace) break;
      if (t.kind == TokenKind::kOpenParen || t.Is(TokenKind::kPunct, "[")) {
        ++depth;
      }
      if (t.kind == TokenKind::kCloseParen || t.Is(TokenKind::kPunct, "]")) {
        depth = std::max(0, depth - 1);
      }
      run.push_back(t);
      ++pos_;
    }
    return Node(Statement{std::move(run), false});
  }

  Node MakeDefinition(HeaderKind kind, std::vector<Token> run) {
    Header h;
    h.kind = kind;
    const bool declarators = TakesDeclarators(run);
    h.tokens = std::move(run);
    h.body = std::make_unique<Node>(ParseBlock());
    if (kind == HeaderKind::kClassDef) {
      if (CurIs(TokenKind::kSemicolon)) {
        h.trailer.push_back(Cur());
        ++pos_;
      } else if (declarators && !AtEnd() &&
                 (Cur().kind == TokenKind::kIdentifier ||
                  Cur().Is(TokenKind::kPunct, "*"))) {
        std::size_t j = pos_;
        while (j < toks_.size() && toks_[j].kind != TokenKind::kSemicolon &&
               toks_[j].kind != TokenKind::kOpenBrace &&
               toks_[j].kind != TokenKind::kCloseBrace) {
          ++j;
        }
        if (j < toks_.size() && toks_[j].kind == TokenKind::kSemicolon) {
          for (; pos_ <= j; ++pos_) h.trailer.push_back(Cur());
        }
      }
    }
    return Node(std::move(h));
  }

  std::vector<Token> toks_;
  std::string name_;
  std::size_t pos_ = 0;
};

inline void FlattenInto(const Node& node, std::vector<Token>& out);

inline void FlattenAll(const std::vector<Node>& nodes, std::vector<Token>& out) {
  for (const Node& n : nodes) FlattenInto(n, out);
}

inline void FlattenInto(const Node& node, std::vector<Token>& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Header>) {
          out.insert(out.end(), n.tokens.begin(), n.tokens.end());
          if (n.body) FlattenInto(*n.body, out);
          out.insert(out.end(), n.trailer.begin(), n.trailer.end());
        } else if constexpr (std::is_same_v<T, Block>) {
          out.push_back(n.open);
          FlattenAll(n.children, out);
          out.push_back(n.close);
        } else if constexpr (std::is_same_v<T, Statement> ||
                             std::is_same_v<T, Label>) {
          out.insert(out.end(), n.tokens.begin(), n.tokens.end());
        } else if constexpr (std::is_same_v<T, Chain>) {
          FlattenAll(n.links, out);
        } else {
          out.push_back(n.token);
        }
      },
      node.value);
}

}  // namespace internal

// Recovers block structure from a token stream (Newline tokens, if present,
// are ignored).
inline BlockTree parse_blocks(const TokenStream& ts) {
  return internal::Parser(ts).Run();
}

inline TokenStream flatten(const BlockTree& tree) {
  TokenStream out;
  out.source_name = tree.source_name;
  internal::FlattenAll(tree.roots, out.tokens);
  return out;
}

using DepthMap = std::unordered_map<const Node*, int>;

namespace internal {

inline void AssignDepth(const Node& node, int depth, DepthMap& map);

// Inside a switch body, nodes following a case label sit one level deeper
// than the labels themselves.
inline void AssignSequenceDepth(const std::vector<Node>& nodes, int depth,
                                bool is_switch, DepthMap& map) {
  bool after_label = false;
  for (const Node& n : nodes) {
    if (is_switch && n.is<Label>()) {
      AssignDepth(n, depth, map);
      after_label = true;
    } else {
      AssignDepth(n, after_label ? depth + 1 : depth, map);
    }
  }
}

inline void AssignDepth(const Node& node, int depth, DepthMap& map) {
  map[&node] = depth;
  if (const auto* h = node.get_if<Header>()) {
    if (!h->body) return;
    if (const auto* block = h->body->get_if<Block>()) {
      map[h->body.get()] = depth;
      AssignSequenceDepth(block->children, depth + 1,
                          h->kind == HeaderKind::kSwitch, map);
    } else {
      AssignDepth(*h->body, depth + 1, map);
    }
  } else if (const auto* block = node.get_if<Block>()) {
    AssignSequenceDepth(block->children, depth + 1, false, map);
  } else if (const auto* chain = node.get_if<Chain>()) {
    for (const Node& link : chain->links) AssignDepth(link, depth, map);
  }
}

}  // namespace internal

// Nesting level of every node: roots are 0, block members and braceless
// bodies are one deeper than their owner.
inline DepthMap depth_map(const BlockTree& tree) {
  DepthMap map;
  internal::AssignSequenceDepth(tree.roots, 0, false, map);
  return map;
}

}  // namespace indentor

#endif  // INDENTOR_BLOCK_TREE_HPP_
