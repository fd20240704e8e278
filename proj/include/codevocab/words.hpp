// SPDX-License-Identifier: Apache-2.0
//
// Corpus words: the flat string units a tokenized corpus is made of, plus
// the structural marker vocabulary and the escaping rules of the on-disk
// format. Markers and source-derived words can never collide in a corpus
// file: a source word shaped like `<...>` is written with a `\` prefix and
// backslashes inside source words are doubled.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codevocab/io.hpp"
#include "codevocab/lexer.hpp"

namespace codevocab {

namespace markers {
inline constexpr std::string_view kWordOpen = "<w>";
inline constexpr std::string_view kWordClose = "</w>";
inline constexpr std::string_view kCapitalized = "<Upper>";
inline constexpr std::string_view kAllCaps = "<UPPER>";
inline constexpr std::string_view kUnderscore = "<_>";
inline constexpr std::string_view kComment = "<comment>";
inline constexpr std::string_view kString = "<string>";
inline constexpr std::string_view kNonEnglish = "<non-en>";
inline constexpr std::string_view kNumber = "<num>";
inline constexpr std::string_view kUnknown = "<unk>";
inline constexpr std::string_view kTab = "<tab>";
inline constexpr std::string_view kNewline = "<nl>";
inline constexpr std::string_view kSpace = "<sp>";
inline constexpr std::string_view kBpeEnd = "</t>";
}  // namespace markers

struct CorpusWord {
  std::string text;
  bool is_marker = false;
  // Kind of the source token this word came from; used for per-kind
  // frequency thresholds. Meaningless for purely structural markers.
  lexer::TokenKind kind = lexer::TokenKind::Identifier;

  bool operator==(const CorpusWord&) const = default;
};

inline CorpusWord marker_word(std::string_view text,
                              lexer::TokenKind kind = lexer::TokenKind::Identifier) {
  return CorpusWord{std::string(text), true, kind};
}

inline CorpusWord source_word(std::string text, lexer::TokenKind kind) {
  return CorpusWord{std::move(text), false, kind};
}

namespace detail {

// Run-length whitespace markers: <sp>, <sp2>..<sp8>, <sp8+> and likewise
// for <tab>/<nl>.
inline std::string run_marker(char cls, std::size_t run) {
  std::string base = cls == ' ' ? "sp" : cls == '\t' ? "tab" : "nl";
  if (run <= 1) return "<" + base + ">";
  if (run <= 8) return "<" + base + std::to_string(run) + ">";
  return "<" + base + "8+>";
}

inline bool is_run_marker(std::string_view w, std::string_view base) {
  if (w.size() < base.size() + 2) return false;
  if (w.front() != '<' || w.back() != '>') return false;
  std::string_view inner = w.substr(1, w.size() - 2);
  if (inner.substr(0, base.size()) != base) return false;
  std::string_view suffix = inner.substr(base.size());
  if (suffix.empty()) return true;
  if (suffix == "8+") return true;
  return suffix.size() == 1 && suffix[0] >= '2' && suffix[0] <= '8';
}

}  // namespace detail

// True for every structural word the toolkit can emit.
inline bool is_marker_word(std::string_view w) {
  using namespace markers;
  if (w == kWordOpen || w == kWordClose || w == kCapitalized || w == kAllCaps ||
      w == kUnderscore || w == kComment || w == kString || w == kNonEnglish ||
      w == kNumber || w == kUnknown || w == kBpeEnd) {
    return true;
  }
  return detail::is_run_marker(w, "sp") || detail::is_run_marker(w, "tab") ||
         detail::is_run_marker(w, "nl");
}

inline bool looks_like_marker(std::string_view w) {
  return w.size() >= 2 && w.front() == '<' && w.back() == '>';
}

// On-disk escaping. Markers are written verbatim; source words double every
// backslash and gain a leading `\` when they are shaped like a marker.
inline std::string escape_word(const CorpusWord& w) {
  if (w.is_marker) return w.text;
  std::string s;
  s.reserve(w.text.size());
  for (char c : w.text) {
    if (c == '\\') s += "\\\\";
    else s += c;
  }
  if (looks_like_marker(s)) s.insert(s.begin(), '\\');
  return s;
}

// Inverse of escape_word. Throws IoError on a malformed escape (an odd
// backslash that does not introduce an escaped marker).
inline CorpusWord unescape_word(std::string_view raw) {
  if (raw.empty()) throw IoError("empty corpus word");
  bool escaped_marker = false;
  std::string_view rest = raw;
  if (raw[0] == '\\' && raw.size() >= 2 && raw[1] == '<') {
    escaped_marker = true;
    rest = raw.substr(1);
  }
  std::string text;
  text.reserve(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == '\\') {
      if (i + 1 >= rest.size() || rest[i + 1] != '\\') {
        throw IoError("malformed escape in corpus word: " + std::string(raw));
      }
      text += '\\';
      ++i;
    } else {
      text += rest[i];
    }
  }
  if (!escaped_marker && looks_like_marker(text) && is_marker_word(text)) {
    return marker_word(text);
  }
  return source_word(std::move(text), lexer::TokenKind::Identifier);
}

// Renders one file's words in the corpus format: words separated by single
// spaces, with a line break after every newline marker so the output keeps
// one logical line per source line when whitespace is kept.
inline std::string render_corpus_file(const std::vector<CorpusWord>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    out += escape_word(words[i]);
    if (i + 1 < words.size()) {
      bool newline = words[i].is_marker && detail::is_run_marker(words[i].text, "nl");
      out += newline ? '\n' : ' ';
    }
  }
  if (!words.empty()) out += '\n';
  return out;
}

// Splits corpus-file content back into words. `where` is used in error
// messages (typically the file path).
inline std::vector<CorpusWord> parse_corpus_file(std::string_view content,
                                                 std::string_view where = "") {
  std::vector<CorpusWord> words;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < content.size()) {
    if (content[i] == ' ' || content[i] == '\n') {
      if (content[i] == '\n') ++line;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < content.size() && content[j] != ' ' && content[j] != '\n') ++j;
    try {
      words.push_back(unescape_word(content.substr(i, j - i)));
    } catch (const IoError& e) {
      throw IoError(std::string(where) + ":" + std::to_string(line) + ": " + e.what());
    }
    i = j;
  }
  return words;
}

}  // namespace codevocab
