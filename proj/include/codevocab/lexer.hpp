// SPDX-License-Identifier: Apache-2.0
//
// Lossless Java lexer: concatenating the text of all tokens reproduces the
// input byte-for-byte. Unicode escapes (\uXXXX) are kept literal so the
// round-trip property holds on any input.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace codevocab::lexer {

enum class TokenKind {
  Identifier,
  Keyword,
  NumberLiteral,
  StringLiteral,
  CharLiteral,
  Comment,
  Whitespace,
  Operator,
  Punctuation,
};

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::NumberLiteral: return "number";
    case TokenKind::StringLiteral: return "string";
    case TokenKind::CharLiteral: return "char";
    case TokenKind::Comment: return "comment";
    case TokenKind::Whitespace: return "whitespace";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
  }
  return "unknown";
}

struct Token {
  std::string text;
  TokenKind kind;
  std::uint32_t line = 1;    // 1-based
  std::uint32_t column = 1;  // 1-based, in bytes

  bool operator==(const Token&) const = default;
};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_alpha(char c) { return is_lower(c) || is_upper(c); }

// Non-ASCII bytes are allowed in identifiers; this is what lets the
// non-English heuristics downstream see words like "café" as identifiers.
inline bool is_ident_start(char c) {
  return is_alpha(c) || c == '_' || c == '$' || static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_ident_part(char c) { return is_ident_start(c) || is_digit(c); }

inline const std::unordered_set<std::string_view>& keywords() {
  // Reserved words plus the true/false/null literals, which downstream
  // policies treat the same way.
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert", "boolean", "break", "byte", "case", "catch",
      "char", "class", "const", "continue", "default", "do", "double",
      "else", "enum", "extends", "final", "finally", "float", "for",
      "goto", "if", "implements", "import", "instanceof", "int",
      "interface", "long", "native", "new", "package", "private",
      "protected", "public", "return", "short", "static", "strictfp",
      "super", "switch", "synchronized", "this", "throw", "throws",
      "transient", "try", "void", "volatile", "while",
      "true", "false", "null"};
  return kw;
}

// Separators per the Java grammar; everything else multi-char is an operator.
inline bool is_separator(std::string_view s) {
  static const std::unordered_set<std::string_view> sep = {
      "(", ")", "{", "}", "[", "]", ";", ",", ".", "...", "@", "::"};
  return sep.contains(s);
}

inline std::string_view match_operator_or_separator(std::string_view rest) {
  static constexpr std::array<std::string_view, 38> table = {
      ">>>=", "...", "<<=", ">>=", ">>>", "->", "::", "==", "!=", "<=",
      ">=",   "&&",  "||",  "++",  "--",  "+=", "-=", "*=", "/=", "&=",
      "|=",   "^=",  "%=",  "<<",  ">>",  "+",  "-",  "*",  "/",  "%",
      "=",    "<",   ">",   "!",   "~",   "&",  "|",  "^"};
  for (std::string_view op : table) {
    if (rest.substr(0, op.size()) == op) return op;
  }
  return {};
}

}  // namespace detail

// Tokenizes Java source. Never throws on malformed input: an unterminated
// string, char or block comment swallows the rest of the file as one token
// and appends a note to `warnings` when provided.
inline std::vector<Token> lex(std::string_view src,
                              std::vector<std::string>* warnings = nullptr) {
  using namespace detail;
  std::vector<Token> out;
  std::size_t i = 0;
  std::uint32_t line = 1, column = 1;

  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  auto emit = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    Token t{std::string(src.substr(begin, end - begin)), kind, line, column};
    for (char c : t.text) {
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    out.push_back(std::move(t));
    i = end;
  };

  while (i < src.size()) {
    char c = src[i];

    // Whitespace: each tab and each newline is its own token, runs of
    // spaces form one token. Merging into run-length markers is a
    // pipeline policy, not a lexer concern.
    if (c == ' ') {
      std::size_t j = i;
      while (j < src.size() && src[j] == ' ') ++j;
      emit(i, j, TokenKind::Whitespace);
      continue;
    }
    if (c == '\t') {
      emit(i, i + 1, TokenKind::Whitespace);
      continue;
    }
    if (c == '\n') {
      emit(i, i + 1, TokenKind::Whitespace);
      continue;
    }
    if (c == '\r') {
      std::size_t j = (i + 1 < src.size() && src[i + 1] == '\n') ? i + 2 : i + 1;
      emit(i, j, TokenKind::Whitespace);
      continue;
    }

    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      std::size_t j = i + 2;
      while (j < src.size() && src[j] != '\n' && src[j] != '\r') ++j;
      emit(i, j, TokenKind::Comment);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      std::size_t j = i + 2;
      bool closed = false;
      while (j + 1 < src.size()) {
        if (src[j] == '*' && src[j + 1] == '/') {
          j += 2;
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) {
        warn("unterminated block comment at line " + std::to_string(line));
        j = src.size();
      }
      emit(i, j, TokenKind::Comment);
      continue;
    }

    if (c == '"' || c == '\'') {
      const char quote = c;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < src.size()) {
        if (src[j] == '\\' && j + 1 < src.size()) {
          j += 2;
          continue;
        }
        if (src[j] == quote) {
          ++j;
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) {
        warn(std::string("unterminated ") +
             (quote == '"' ? "string" : "char") + " literal at line " +
             std::to_string(line));
      }
      emit(i, j, quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral);
      continue;
    }

    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = i;
      if (src[j] == '0' && j + 1 < src.size() && (src[j + 1] == 'x' || src[j + 1] == 'X')) {
        j += 2;
        while (j < src.size() && (is_hex_digit(src[j]) || src[j] == '_')) ++j;
        if (j < src.size() && src[j] == '.') {  // hex float
          ++j;
          while (j < src.size() && (is_hex_digit(src[j]) || src[j] == '_')) ++j;
        }
        if (j < src.size() && (src[j] == 'p' || src[j] == 'P')) {
          std::size_t k = j + 1;
          if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
          if (k < src.size() && is_digit(src[k])) {
            j = k;
            while (j < src.size() && (is_digit(src[j]) || src[j] == '_')) ++j;
          }
        }
      } else if (src[j] == '0' && j + 1 < src.size() && (src[j + 1] == 'b' || src[j + 1] == 'B')) {
        j += 2;
        while (j < src.size() && (src[j] == '0' || src[j] == '1' || src[j] == '_')) ++j;
      } else {
        while (j < src.size() && (is_digit(src[j]) || src[j] == '_')) ++j;
        if (j < src.size() && src[j] == '.' && j + 1 < src.size() && is_digit(src[j + 1])) {
          ++j;
          while (j < src.size() && (is_digit(src[j]) || src[j] == '_')) ++j;
        }
        if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
          if (k < src.size() && is_digit(src[k])) {
            j = k;
            while (j < src.size() && (is_digit(src[j]) || src[j] == '_')) ++j;
          }
        }
      }
      if (j < src.size() && (src[j] == 'l' || src[j] == 'L' || src[j] == 'f' ||
                             src[j] == 'F' || src[j] == 'd' || src[j] == 'D')) {
        ++j;
      }
      emit(i, j, TokenKind::NumberLiteral);
      continue;
    }

    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_part(src[j])) ++j;
      std::string_view word = src.substr(i, j - i);
      emit(i, j, keywords().contains(word) ? TokenKind::Keyword : TokenKind::Identifier);
      continue;
    }

    if (std::string_view op = match_operator_or_separator(src.substr(i)); !op.empty()) {
      emit(i, i + op.size(), is_separator(op) ? TokenKind::Punctuation : TokenKind::Operator);
      continue;
    }

    // Anything else (separators, stray backslashes, control bytes) is a
    // one-byte punctuation token; the stream stays lossless.
    emit(i, i + 1, TokenKind::Punctuation);
  }
  return out;
}

inline std::map<TokenKind, std::size_t> count_kinds(const std::vector<Token>& tokens) {
  std::map<TokenKind, std::size_t> counts;
  for (const Token& t : tokens) ++counts[t.kind];
  return counts;
}

// Debug dump: one token per line, `<kind>\t<escaped text>`.
inline std::string dump_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    out += to_string(t.kind);
    out += '\t';
    for (char c : t.text) {
      switch (c) {
        case '\\': out += "\\\\"; break;
        case '\t': out += "\\t"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace codevocab::lexer
