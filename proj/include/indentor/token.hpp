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

#ifndef INDENTOR_TOKEN_HPP_
#define INDENTOR_TOKEN_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indentor {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumber,
  kStringLiteral,
  kCharLiteral,
  kPunct,
  kOpenBrace,
  kCloseBrace,
  kOpenParen,
  kCloseParen,
  kSemicolon,
  kColon,
  kComma,
  kLineComment,
  kBlockComment,
  kPreprocessorLine,
  kNewline,
};

inline std::string_view KindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "Identifier";
    case TokenKind::kKeyword: return "Keyword";
    case TokenKind::kNumber: return "Number";
    case TokenKind::kStringLiteral: return "StringLiteral";
    case TokenKind::kCharLiteral: return "CharLiteral";
    case TokenKind::kPunct: return "Punct";
    case TokenKind::kOpenBrace: return "OpenBrace";
    case TokenKind::kCloseBrace: return "CloseBrace";
    case TokenKind::kOpenParen: return "OpenParen";
    case TokenKind::kCloseParen: return "CloseParen";
    case TokenKind::kSemicolon: return "Semicolon";
    case TokenKind::kColon: return "Colon";
    case TokenKind::kComma: return "Comma";
    case TokenKind::kLineComment: return "LineComment";
    case TokenKind::kBlockComment: return "BlockComment";
    case TokenKind::kPreprocessorLine: return "PreprocessorLine";
    case TokenKind::kNewline: return "Newline";
  }
  return "?";
}

// A lexical unit. `leading` holds the whitespace bytes between the previous
// token and this one, so that concatenating leading + text over the stream
// (plus TokenStream::trailing) reproduces the source byte for byte.
struct Token {
  TokenKind kind = TokenKind::kPunct;
  std::string text;
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  std::string leading;

  bool Is(TokenKind k) const { return kind == k; }
  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsComment() const {
    return kind == TokenKind::kLineComment ||
           kind == TokenKind::kBlockComment;
  }
  // Line on which the token's last byte sits (block comments and
  // continued preprocessor lines can span several lines).
  int EndLine() const {
    int end = line;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] == '\n') ++end;
    }
    if (kind != TokenKind::kNewline && !text.empty() && text.back() == '\n') {
      ++end;
    }
    return end;
  }

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text && a.line == b.line &&
           a.column == b.column;
  }
};

struct TokenStream {
  std::vector<Token> tokens;
  std::string source_name;
  std::string trailing;  // whitespace after the final token
};

enum class ErrorKind {
  kUnterminatedString,
  kUnterminatedComment,
  kUnbalancedBraces,
  kUnexpectedCloseBrace,
  kMalformedDoWhile,
  kElseWithoutIf,
};

// Lexer and parser failures. what() is formatted `file:line:col: message`.
class SourceError : public std::runtime_error {
 public:
  SourceError(ErrorKind kind, std::string source_name, int line, int column,
              const std::string& message)
      : std::runtime_error(source_name + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        kind_(kind),
        source_name_(std::move(source_name)),
        line_(line),
        column_(column) {}

  ErrorKind kind() const { return kind_; }
  const std::string& source_name() const { return source_name_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  std::string source_name_;
  int line_;
  int column_;
};

}  // namespace indentor

#endif  // INDENTOR_TOKEN_HPP_
