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

#ifndef INDENTOR_LEXER_HPP_
#define INDENTOR_LEXER_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "indentor/token.hpp"

namespace indentor {

inline bool IsKeyword(std::string_view word) {
  static constexpr std::array<std::string_view, 13> kKeywords = {
      "if",     "else",    "while", "for",    "do",    "switch",  "case",
      "default", "class",  "struct", "return", "break", "continue"};
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

namespace internal {

inline bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
inline bool IsIdentChar(unsigned char c) {
  return IsIdentStart(c) || std::isdigit(c);
}

// Longest-match operator table. Everything not listed lexes as a one-byte
// Punct token.
inline std::size_t OperatorLength(std::string_view rest) {
  static constexpr std::array<std::string_view, 3> kThree = {"...", "<<=",
                                                             ">>="};
  static constexpr std::array<std::string_view, 21> kTwo = {
      "==", "<=", "++", "+=", "->", "::", "&&", "||", "!=", ">=", "--",
      "<<", ">>", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "##"};
  for (auto op : kThree) {
    if (rest.substr(0, 3) == op) return 3;
  }
  for (auto op : kTwo) {
    if (rest.substr(0, 2) == op) return 2;
  }
  return 1;
}

class Lexer {
 public:
  Lexer(std::string_view source, std::string source_name)
      : src_(source), name_(std::move(source_name)) {}

  TokenStream Run() {
    TokenStream out;
    out.source_name = name_;
    std::string pending_ws;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\v' || c == '\f' ||
          (c == '\r' && Peek(1) != '\n')) {
        pending_ws += c;
        Advance(1);
        continue;
      }
      Token tok;
      tok.line = line_;
      tok.column = column_;
      tok.leading = std::move(pending_ws);
      pending_ws.clear();
      const std::size_t start = pos_;
      tok.kind = Scan(at_line_start_);
      tok.text = std::string(src_.substr(start, pos_ - start));
      at_line_start_ = tok.kind == TokenKind::kNewline;
      out.tokens.push_back(std::move(tok));
    }
    out.trailing = std::move(pending_ws);
    return out;
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void Fail(ErrorKind kind, int line, int column,
                         const std::string& message) const {
    throw SourceError(kind, name_, line, column, message);
  }

  TokenKind Scan(bool at_line_start) {
    const char c = src_[pos_];
    if (c == '\n' || c == '\r') {
      Advance(c == '\r' ? 2 : 1);
      return TokenKind::kNewline;
    }
    if (c == '#' && at_line_start) {
      ScanDirective();
      return TokenKind::kPreprocessorLine;
    }
    if (c == '/' && Peek(1) == '/') {
      ScanLineComment();
      return TokenKind::kLineComment;
    }
    if (c == '/' && Peek(1) == '*') {
      ScanBlockComment();
      return TokenKind::kBlockComment;
    }
    if (c == '"' || c == '\'') {
      ScanQuoted(c);
      return c == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      ScanNumber();
      return TokenKind::kNumber;
    }
    if (IsIdentStart(static_cast<unsigned char>(c))) {
      return ScanWord();
    }
    switch (c) {
      case '{': Advance(1); return TokenKind::kOpenBrace;
      case '}': Advance(1); return TokenKind::kCloseBrace;
      case '(': Advance(1); return TokenKind::kOpenParen;
      case ')': Advance(1); return TokenKind::kCloseParen;
      case ';': Advance(1); return TokenKind::kSemicolon;
      case ',': Advance(1); return TokenKind::kComma;
      case ':':
        if (Peek(1) == ':') {
          Advance(2);
          return TokenKind::kPunct;
        }
        Advance(1);
        return TokenKind::kColon;
      default: break;
    }
    Advance(OperatorLength(src_.substr(pos_)));
    return TokenKind::kPunct;
  }

  TokenKind ScanWord() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           IsIdentChar(static_cast<unsigned char>(src_[pos_]))) {
      Advance(1);
    }
    const std::string_view word = src_.substr(start, pos_ - start);
    const char next = Peek(0);
    // Encoding prefixes and raw strings glue onto the following literal.
    const bool is_prefix = word == "L" || word == "u" || word == "U" ||
                           word == "u8";
    const bool is_raw = word == "R" || word == "LR" || word == "uR" ||
                        word == "UR" || word == "u8R";
    if (is_raw && next == '"') {
      ScanRawString(start);
      return TokenKind::kStringLiteral;
    }
    if (is_prefix && (next == '"' || next == '\'')) {
      ScanQuoted(next);
      return next == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral;
    }
    return IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier;
  }

  void ScanNumber() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if ((c == '+' || c == '-') && pos_ > 0) {
        const char prev = src_[pos_ - 1];
        if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
          Advance(1);
          continue;
        }
        break;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
          c == '_' ||
          (c == '\'' && std::isalnum(static_cast<unsigned char>(Peek(1))))) {
        Advance(1);
        continue;
      }
      break;
    }
  }

  // Quoted literal starting at pos_ (the opening quote).
  void ScanQuoted(char quote) {
    const int open_line = line_;
    const int open_column = column_;
    Advance(1);
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        Advance(Peek(1) == '\r' && Peek(2) == '\n' ? 3 : 2);
        continue;
      }
      if (c == quote) {
        Advance(1);
        return;
      }
      if (c == '\n') break;
      Advance(1);
    }
    Fail(ErrorKind::kUnterminatedString, open_line, open_column,
         quote == '"' ? "unterminated string literal"
                      : "unterminated character literal");
  }

  void ScanRawString(std::size_t token_start) {
    const int open_line = line_;
    const int open_column =
        column_ - static_cast<int>(pos_ - token_start);
    Advance(1);  // opening quote
    std::string delimiter;
    while (pos_ < src_.size() && src_[pos_] != '(') {
      delimiter += src_[pos_];
      Advance(1);
    }
    const std::string closing = ")" + delimiter + "\"";
    const std::size_t end = src_.find(closing, pos_);
    if (end == std::string_view::npos) {
      Fail(ErrorKind::kUnterminatedString, open_line, open_column,
           "unterminated raw string literal");
    }
    Advance(end + closing.size() - pos_);
  }

  void ScanLineComment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && (Peek(1) == '\n' ||
                                 (Peek(1) == '\r' && Peek(2) == '\n'))) {
        Advance(Peek(1) == '\n' ? 2 : 3);
        continue;
      }
      if (src_[pos_] == '\r' && Peek(1) == '\n') break;
      Advance(1);
    }
  }

  void ScanBlockComment() {
    const int open_line = line_;
    const int open_column = column_;
    const std::size_t end = src_.find("*/", pos_ + 2);
    if (end == std::string_view::npos) {
      Fail(ErrorKind::kUnterminatedComment, open_line, open_column,
           "unterminated block comment");
    }
    Advance(end + 2 - pos_);
  }

  // A directive runs to the end of the line, following backslash
  // continuations and any block comment that starts inside it. Quotes are
  // honored only within a line so that `#error don't` stays harmless.
  void ScanDirective() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n' || (c == '\r' && Peek(1) == '\n')) return;
      if (c == '\\' && (Peek(1) == '\n' ||
                        (Peek(1) == '\r' && Peek(2) == '\n'))) {
        Advance(Peek(1) == '\n' ? 2 : 3);
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        ScanBlockComment();
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        ScanLineComment();
        return;
      }
      if (c == '"' || c == '\'') {
        std::size_t i = pos_ + 1;
        while (i < src_.size() && src_[i] != c && src_[i] != '\n') {
          i += src_[i] == '\\' ? 2 : 1;
        }
        if (i < src_.size() && src_[i] == c) {
          Advance(i + 1 - pos_);
          continue;
        }
      }
      Advance(1);
    }
  }

  std::string_view src_;
  std::string name_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool at_line_start_ = true;
};

}  // namespace internal

// Splits `source` into a lossless token stream. Comments, literals and
// preprocessor lines are single opaque tokens.
inline TokenStream tokenize(std::string_view source,
                            std::string source_name = "<input>") {
  return internal::Lexer(source, std::move(source_name)).Run();
}

inline TokenStream significant(const TokenStream& ts) {
  TokenStream out;
  out.source_name = ts.source_name;
  for (const Token& tok : ts.tokens) {
    if (tok.kind != TokenKind::kNewline) out.tokens.push_back(tok);
  }
  return out;
}

// Inverse of tokenize, for streams that still carry their whitespace.
inline std::string Reassemble(const TokenStream& ts) {
  std::string out;
  for (const Token& tok : ts.tokens) {
    out += tok.leading;
    out += tok.text;
  }
  out += ts.trailing;
  return out;
}

}  // namespace indentor

#endif  // INDENTOR_LEXER_HPP_
