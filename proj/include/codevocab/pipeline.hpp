// SPDX-License-Identifier: Apache-2.0
//
// The modeling pipeline: turns a lexed token stream into a flat sequence of
// corpus words under a configurable set of policies (whitespace, comments,
// strings, numbers, non-English handling, word splitting with case
// encoding). With every policy at its lossless setting the original file
// text is reconstructible from the words exactly.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codevocab/io.hpp"
#include "codevocab/lexer.hpp"
#include "codevocab/words.hpp"

namespace codevocab::pipeline {

using lexer::Token;
using lexer::TokenKind;

enum class WhitespacePolicy { KeepEach, MergeRuns, Drop };
enum class CommentPolicy { KeepAsWords, Placeholder };
enum class StringPolicy { KeepAsWords, Placeholder };
enum class NumberPolicy { Keep, PlaceholderAll, KeepSmall, SplitDigits };
enum class NonEnglishPolicy { Keep, ReplaceToken, ReplaceTokenAndFilterFiles };
enum class SplitPolicy { Unsplit, SplitCaseEncoded, SplitKeepCase };

struct PipelineConfig {
  WhitespacePolicy whitespace_policy = WhitespacePolicy::KeepEach;
  CommentPolicy comment_policy = CommentPolicy::KeepAsWords;
  StringPolicy string_policy = StringPolicy::KeepAsWords;
  NumberPolicy number_policy = NumberPolicy::Keep;
  // KeepSmall keeps integral literals whose value is below this.
  long long number_threshold = 100;
  NonEnglishPolicy nonenglish_policy = NonEnglishPolicy::Keep;
  double code_threshold = 0.006;
  double code_and_strings_threshold = 0.019;
  SplitPolicy split_policy = SplitPolicy::Unsplit;
  std::uint64_t min_frequency_default = 1;
  std::map<TokenKind, std::uint64_t> min_frequency;

  bool filtering_enabled() const {
    if (min_frequency_default > 1) return true;
    for (const auto& [kind, k] : min_frequency) {
      if (k > 1) return true;
    }
    return false;
  }

  std::string serialize() const;
  static PipelineConfig parse(std::string_view text);
};

// A word is non-English when its UTF-8 encoding contains any byte >= 0x80.
inline bool is_nonenglish(std::string_view word) {
  for (char c : word) {
    if (static_cast<unsigned char>(c) >= 0x80) return true;
  }
  return false;
}

namespace detail {

inline bool is_space_tab_nl(char c) { return c == ' ' || c == '\t' || c == '\n'; }

// Alternating word / whitespace-gap units of a comment or literal body.
struct TextUnit {
  bool is_gap;
  std::string_view text;
};

inline std::vector<TextUnit> scan_units(std::string_view text) {
  std::vector<TextUnit> units;
  std::size_t i = 0;
  while (i < text.size()) {
    bool gap = is_space_tab_nl(text[i]);
    std::size_t j = i;
    while (j < text.size() && is_space_tab_nl(text[j]) == gap) ++j;
    units.push_back({gap, text.substr(i, j - i)});
    i = j;
  }
  return units;
}

inline void emit_gap_markers(std::string_view gap, TokenKind kind,
                             std::vector<CorpusWord>& out) {
  for (char c : gap) {
    switch (c) {
      case ' ': out.push_back(marker_word(markers::kSpace, kind)); break;
      case '\t': out.push_back(marker_word(markers::kTab, kind)); break;
      default: out.push_back(marker_word(markers::kNewline, kind)); break;
    }
  }
}

inline void append_wrapped(std::vector<CorpusWord>&& elems, TokenKind kind,
                           std::vector<CorpusWord>& out) {
  if (elems.size() > 1) {
    out.push_back(marker_word(markers::kWordOpen, kind));
    for (auto& e : elems) out.push_back(std::move(e));
    out.push_back(marker_word(markers::kWordClose, kind));
  } else {
    for (auto& e : elems) out.push_back(std::move(e));
  }
}

// Comment text as a word sequence. A single space between two words is
// implicit; every other whitespace character is an explicit marker.
inline std::vector<CorpusWord> encode_plain_block(std::string_view text, TokenKind kind) {
  std::vector<CorpusWord> elems;
  const auto units = scan_units(text);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].is_gap) {
      elems.push_back(source_word(std::string(units[i].text), kind));
      continue;
    }
    const bool between_words = i > 0 && i + 1 < units.size();
    if (between_words && units[i].text == " ") continue;
    emit_gap_markers(units[i].text, kind, elems);
  }
  return elems;
}

// String/char literal as a word sequence: the quote delimiters become their
// own words with no implied spacing next to them.
inline std::vector<CorpusWord> encode_quoted_block(std::string_view text, TokenKind kind) {
  const char delim = text.front();
  bool closed = false;
  {
    std::size_t i = 1;
    while (i < text.size()) {
      if (text[i] == '\\' && i + 1 < text.size()) {
        i += 2;
        continue;
      }
      if (text[i] == delim) {
        closed = true;
        break;
      }
      ++i;
    }
  }
  std::string_view body = closed ? text.substr(1, text.size() - 2) : text.substr(1);

  std::vector<CorpusWord> elems;
  elems.push_back(source_word(std::string(1, delim), kind));
  const auto units = scan_units(body);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].is_gap) {
      elems.push_back(source_word(std::string(units[i].text), kind));
      continue;
    }
    const bool between_words = i > 0 && i + 1 < units.size();
    if (between_words && units[i].text == " ") continue;
    emit_gap_markers(units[i].text, kind, elems);
  }
  if (closed) elems.push_back(source_word(std::string(1, delim), kind));
  return elems;
}

enum class SegKind { Underscore, Digits, Alpha };

struct Segment {
  SegKind kind;
  std::string_view text;
};

// Split points: underscores, letter/digit transitions, lowercase-to-
// uppercase transitions, and before the last capital of an uppercase run
// that is followed by lowercase (URLException -> URL | Exception).
inline std::vector<Segment> segment_identifier(std::string_view word) {
  using lexer::detail::is_digit;
  using lexer::detail::is_lower;
  using lexer::detail::is_upper;
  std::vector<Segment> segs;
  std::size_t i = 0;
  const std::size_t n = word.size();
  while (i < n) {
    if (word[i] == '_') {
      segs.push_back({SegKind::Underscore, word.substr(i, 1)});
      ++i;
      continue;
    }
    if (is_digit(word[i])) {
      std::size_t j = i;
      while (j < n && is_digit(word[j])) ++j;
      segs.push_back({SegKind::Digits, word.substr(i, j - i)});
      i = j;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && word[j] != '_' && !is_digit(word[j])) {
      if (is_lower(word[j - 1]) && is_upper(word[j])) break;
      if (is_upper(word[j - 1]) && is_upper(word[j]) && j + 1 < n && is_lower(word[j + 1])) break;
      ++j;
    }
    segs.push_back({SegKind::Alpha, word.substr(i, j - i)});
    i = j;
  }
  return segs;
}

enum class Casing { Plain, Capitalized, AllCaps, Mixed };

inline Casing classify_casing(std::string_view seg) {
  using lexer::detail::is_alpha;
  using lexer::detail::is_upper;
  bool has_letter = false, has_upper = false, upper_after_first = false, all_upper = true;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (!is_alpha(seg[i])) continue;
    has_letter = true;
    if (is_upper(seg[i])) {
      has_upper = true;
      if (i > 0) upper_after_first = true;
    } else {
      all_upper = false;
    }
  }
  if (!has_letter || !has_upper) return Casing::Plain;
  const bool first_upper = is_upper(seg.front());
  if (first_upper && !upper_after_first) return Casing::Capitalized;
  if (first_upper && all_upper && seg.size() >= 2) return Casing::AllCaps;
  return Casing::Mixed;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace detail

// Convention-based identifier splitting with optional case encoding.
// With keep_case=false subtokens are lowercased and case is recorded in
// <Upper> / <UPPER> markers; underscores become <_>. Results with more
// than one segment are wrapped <w> ... </w>. Reversible for arbitrary
// input strings: segments whose casing fits no marker pass through
// verbatim.
inline std::vector<CorpusWord> split_identifier(std::string_view word, bool keep_case,
                                                TokenKind kind = TokenKind::Identifier) {
  using namespace detail;
  const auto segs = segment_identifier(word);
  std::vector<CorpusWord> elems;
  for (const Segment& seg : segs) {
    switch (seg.kind) {
      case SegKind::Underscore:
        elems.push_back(marker_word(markers::kUnderscore, kind));
        break;
      case SegKind::Digits:
        elems.push_back(source_word(std::string(seg.text), kind));
        break;
      case SegKind::Alpha: {
        if (keep_case) {
          elems.push_back(source_word(std::string(seg.text), kind));
          break;
        }
        switch (classify_casing(seg.text)) {
          case Casing::Capitalized:
            elems.push_back(marker_word(markers::kCapitalized, kind));
            elems.push_back(source_word(ascii_lower(seg.text), kind));
            break;
          case Casing::AllCaps:
            elems.push_back(marker_word(markers::kAllCaps, kind));
            elems.push_back(source_word(ascii_lower(seg.text), kind));
            break;
          default:
            elems.push_back(source_word(std::string(seg.text), kind));
        }
        break;
      }
    }
  }
  if (segs.size() > 1) {
    std::vector<CorpusWord> wrapped;
    wrapped.reserve(elems.size() + 2);
    wrapped.push_back(marker_word(markers::kWordOpen, kind));
    for (auto& e : elems) wrapped.push_back(std::move(e));
    wrapped.push_back(marker_word(markers::kWordClose, kind));
    return wrapped;
  }
  return elems;
}

// Exact inverse of split_identifier. Accepts both the wrapped and the
// unwrapped form; throws std::invalid_argument naming the offending marker
// on malformed input.
inline std::string unsplit_identifier(const std::vector<CorpusWord>& words) {
  using namespace markers;
  std::size_t i = 0;
  std::size_t end = words.size();
  bool wrapped = false;
  if (!words.empty() && words.front().is_marker && words.front().text == kWordOpen) {
    wrapped = true;
    i = 1;
    if (words.back().is_marker && words.back().text == kWordClose) {
      end = words.size() - 1;
    } else {
      throw std::invalid_argument("identifier encoding: <w> without closing </w>");
    }
  }
  std::string out;
  while (i < end) {
    const CorpusWord& w = words[i];
    if (!w.is_marker) {
      out += w.text;
      ++i;
      continue;
    }
    if (w.text == kUnderscore) {
      out += '_';
      ++i;
      continue;
    }
    if (w.text == kCapitalized || w.text == kAllCaps) {
      if (i + 1 >= end || words[i + 1].is_marker) {
        throw std::invalid_argument("identifier encoding: dangling case marker " + w.text);
      }
      std::string sub = words[i + 1].text;
      if (w.text == kAllCaps) {
        for (char& c : sub) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      } else if (!sub.empty()) {
        sub[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sub[0])));
      }
      out += sub;
      i += 2;
      continue;
    }
    if (w.text == kWordOpen || w.text == kWordClose) {
      throw std::invalid_argument("identifier encoding: unexpected marker " + w.text +
                                  (wrapped ? " inside <w> block" : " without <w> block"));
    }
    throw std::invalid_argument("identifier encoding: unexpected marker " + w.text);
  }
  return out;
}

// Number literals under the digit-splitting policy: one word per character,
// wrapped when the literal has more than one.
inline std::vector<CorpusWord> split_number(std::string_view literal) {
  std::vector<CorpusWord> elems;
  elems.reserve(literal.size());
  for (char c : literal) {
    elems.push_back(source_word(std::string(1, c), TokenKind::NumberLiteral));
  }
  if (elems.size() > 1) {
    std::vector<CorpusWord> wrapped;
    wrapped.reserve(elems.size() + 2);
    wrapped.push_back(marker_word(markers::kWordOpen, TokenKind::NumberLiteral));
    for (auto& e : elems) wrapped.push_back(std::move(e));
    wrapped.push_back(marker_word(markers::kWordClose, TokenKind::NumberLiteral));
    return wrapped;
  }
  return elems;
}

// code_ratio: non-English identifiers over all identifiers.
// code_and_strings_ratio: non-English identifiers and string-literal words
// over all of them. Both 0 when the denominator is 0.
inline std::pair<double, double> file_nonenglish_ratio(const std::vector<Token>& tokens) {
  std::uint64_t ids = 0, ids_non = 0, str_words = 0, str_non = 0;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Identifier) {
      ++ids;
      if (is_nonenglish(t.text)) ++ids_non;
    } else if (t.kind == TokenKind::StringLiteral) {
      for (const auto& unit : detail::scan_units(t.text)) {
        if (unit.is_gap) continue;
        ++str_words;
        if (is_nonenglish(unit.text)) ++str_non;
      }
    }
  }
  const double code = ids == 0 ? 0.0 : static_cast<double>(ids_non) / static_cast<double>(ids);
  const std::uint64_t denom = ids + str_words;
  const double both =
      denom == 0 ? 0.0 : static_cast<double>(ids_non + str_non) / static_cast<double>(denom);
  return {code, both};
}

namespace detail {

// True when the literal denotes an integral value below `threshold`.
// Any float form (fraction, exponent, f/F/d/D suffix) is not "small".
inline bool is_small_integer_literal(std::string_view literal, long long threshold) {
  std::string digits;
  digits.reserve(literal.size());
  for (char c : literal) {
    if (c != '_') digits.push_back(c);
  }
  std::string_view s = digits;
  if (s.empty()) return false;
  if (s.back() == 'l' || s.back() == 'L') s.remove_suffix(1);
  if (s.empty()) return false;
  if (s.back() == 'f' || s.back() == 'F' || s.back() == 'd' || s.back() == 'D') {
    // f/F are hex digits; only a suffix outside a hex literal marks a float.
    if (!(s.size() > 2 && (s[1] == 'x' || s[1] == 'X'))) return false;
  }
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    base = 2;
    s.remove_prefix(2);
  } else if (s.size() > 1 && s[0] == '0') {
    base = 8;
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  long long value = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else return false;  // '.', exponent, or stray suffix: not integral
    if (d >= base) return false;
    value = value * base + d;
    if (value >= threshold) return false;  // also guards overflow
  }
  return value < threshold;
}

// Replaces non-English source words with <non-en>, dropping a case marker
// that immediately precedes a replaced subtoken.
inline void replace_nonenglish_words(std::vector<CorpusWord>& words) {
  std::vector<CorpusWord> out;
  out.reserve(words.size());
  for (CorpusWord& w : words) {
    if (!w.is_marker && is_nonenglish(w.text)) {
      if (!out.empty() && out.back().is_marker &&
          (out.back().text == markers::kCapitalized || out.back().text == markers::kAllCaps)) {
        out.pop_back();
      }
      out.push_back(marker_word(markers::kNonEnglish, w.kind));
    } else {
      out.push_back(std::move(w));
    }
  }
  words = std::move(out);
}

}  // namespace detail

// Applies every configured policy to one file's token stream. Returns
// nullopt when the file itself is filtered out by the non-English file
// filter; that is a normal outcome, not an error.
inline std::optional<std::vector<CorpusWord>> apply(const std::vector<Token>& tokens,
                                                    const PipelineConfig& config) {
  using namespace detail;
  if (config.nonenglish_policy == NonEnglishPolicy::ReplaceTokenAndFilterFiles) {
    const auto [code, both] = file_nonenglish_ratio(tokens);
    if (code > config.code_threshold || both > config.code_and_strings_threshold) {
      return std::nullopt;
    }
  }
  const bool replace_nonen = config.nonenglish_policy != NonEnglishPolicy::Keep;

  std::vector<CorpusWord> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    switch (t.kind) {
      case TokenKind::Whitespace: {
        std::size_t j = i;
        std::string chars;
        for (; j < tokens.size() && tokens[j].kind == TokenKind::Whitespace; ++j) {
          const std::string& text = tokens[j].text;
          if (text[0] == ' ') chars.append(text);
          else if (text[0] == '\t') chars.push_back('\t');
          else chars.push_back('\n');  // \n, \r\n and \r are one newline
        }
        if (config.whitespace_policy == WhitespacePolicy::KeepEach) {
          emit_gap_markers(chars, TokenKind::Whitespace, out);
        } else if (config.whitespace_policy == WhitespacePolicy::MergeRuns) {
          std::size_t k = 0;
          while (k < chars.size()) {
            std::size_t r = k;
            while (r < chars.size() && chars[r] == chars[k]) ++r;
            out.push_back(marker_word(codevocab::detail::run_marker(chars[k], r - k),
                                      TokenKind::Whitespace));
            k = r;
          }
        }
        i = j;
        continue;
      }
      case TokenKind::Comment: {
        if (config.comment_policy == CommentPolicy::Placeholder) {
          out.push_back(marker_word(markers::kComment, TokenKind::Comment));
        } else {
          auto elems = encode_plain_block(t.text, TokenKind::Comment);
          if (replace_nonen) replace_nonenglish_words(elems);
          append_wrapped(std::move(elems), TokenKind::Comment, out);
        }
        break;
      }
      case TokenKind::StringLiteral:
      case TokenKind::CharLiteral: {
        if (config.string_policy == StringPolicy::Placeholder) {
          out.push_back(marker_word(markers::kString, t.kind));
        } else {
          auto elems = encode_quoted_block(t.text, t.kind);
          if (replace_nonen) replace_nonenglish_words(elems);
          append_wrapped(std::move(elems), t.kind, out);
        }
        break;
      }
      case TokenKind::NumberLiteral: {
        switch (config.number_policy) {
          case NumberPolicy::Keep:
            out.push_back(source_word(t.text, TokenKind::NumberLiteral));
            break;
          case NumberPolicy::PlaceholderAll:
            out.push_back(marker_word(markers::kNumber, TokenKind::NumberLiteral));
            break;
          case NumberPolicy::KeepSmall:
            if (is_small_integer_literal(t.text, config.number_threshold)) {
              out.push_back(source_word(t.text, TokenKind::NumberLiteral));
            } else {
              out.push_back(marker_word(markers::kNumber, TokenKind::NumberLiteral));
            }
            break;
          case NumberPolicy::SplitDigits: {
            auto elems = split_number(t.text);
            for (auto& e : elems) out.push_back(std::move(e));
            break;
          }
        }
        break;
      }
      case TokenKind::Identifier:
      case TokenKind::Keyword: {
        if (config.split_policy == SplitPolicy::Unsplit) {
          if (replace_nonen && is_nonenglish(t.text)) {
            out.push_back(marker_word(markers::kNonEnglish, t.kind));
          } else {
            out.push_back(source_word(t.text, t.kind));
          }
        } else {
          auto elems = split_identifier(
              t.text, config.split_policy == SplitPolicy::SplitKeepCase, t.kind);
          if (replace_nonen) replace_nonenglish_words(elems);
          for (auto& e : elems) out.push_back(std::move(e));
        }
        break;
      }
      case TokenKind::Operator:
      case TokenKind::Punctuation:
        out.push_back(source_word(t.text, t.kind));
        break;
    }
    ++i;
  }
  return out;
}

using Frequency = std::map<std::string, std::uint64_t>;

// Counts source words (markers excluded) into `freq`.
inline void count_words(const std::vector<CorpusWord>& words, Frequency& freq) {
  for (const CorpusWord& w : words) {
    if (!w.is_marker) ++freq[w.text];
  }
}

// Replaces every source word whose training frequency is below its
// threshold with <unk>. The frequency table must come from the training
// split only; per-kind thresholds override the default.
inline std::vector<CorpusWord> filter_infrequent(
    std::vector<CorpusWord> words, const Frequency& train_freq, std::uint64_t default_min,
    const std::map<TokenKind, std::uint64_t>& per_kind = {}) {
  for (CorpusWord& w : words) {
    if (w.is_marker) continue;
    std::uint64_t threshold = default_min;
    if (auto it = per_kind.find(w.kind); it != per_kind.end()) threshold = it->second;
    auto fit = train_freq.find(w.text);
    const std::uint64_t count = fit == train_freq.end() ? 0 : fit->second;
    if (count < threshold) {
      w = marker_word(markers::kUnknown, w.kind);
    }
  }
  return words;
}

namespace detail {

inline std::size_t run_marker_length(std::string_view text) {
  // <sp> is one char, <sp2>..<sp8> carry their length, <sp8+> is open-ended.
  std::string_view inner = text.substr(1, text.size() - 2);
  while (!inner.empty() && lexer::detail::is_alpha(inner.front())) inner.remove_prefix(1);
  if (inner.empty()) return 1;
  if (inner == "8+") {
    throw std::invalid_argument("cannot reconstruct open-ended run " + std::string(text));
  }
  return static_cast<std::size_t>(inner.front() - '0');
}

inline char run_marker_char(std::string_view text) {
  if (text.substr(0, 3) == "<sp") return ' ';
  if (text.substr(0, 4) == "<tab") return '\t';
  return '\n';
}

inline bool is_whitespace_marker(const CorpusWord& w) {
  return w.is_marker && (codevocab::detail::is_run_marker(w.text, "sp") ||
                         codevocab::detail::is_run_marker(w.text, "tab") ||
                         codevocab::detail::is_run_marker(w.text, "nl"));
}

// Joins a <w>-wrapped comment or literal block back to source text.
inline std::string decode_text_block(const std::vector<CorpusWord>& block, bool quoted) {
  std::string out;
  std::size_t i = 0;
  std::size_t end = block.size();
  std::string closing;
  if (quoted) {
    out += block[0].text;
    i = 1;
    if (end - i >= 1 && !block[end - 1].is_marker && block[end - 1].text == block[0].text) {
      closing = block[end - 1].text;
      --end;
    }
  }
  bool prev_was_word = false;
  for (; i < end; ++i) {
    const CorpusWord& w = block[i];
    if (w.is_marker) {
      if (!is_whitespace_marker(w)) {
        throw std::invalid_argument("cannot reconstruct marker " + w.text + " in text block");
      }
      out.append(run_marker_length(w.text), run_marker_char(w.text));
      prev_was_word = false;
    } else {
      // Implicit single space between adjacent words; the opening quote of
      // a literal does not take part.
      if (prev_was_word) out += ' ';
      out += w.text;
      prev_was_word = true;
    }
  }
  out += closing;
  return out;
}

}  // namespace detail

// Reconstructs the original (newline-normalized) file text from corpus
// words. Only defined for lossless configurations; lossy markers such as
// <comment> or <unk> raise std::invalid_argument.
inline std::string reconstruct_file(const std::vector<CorpusWord>& words) {
  using namespace detail;
  using namespace markers;
  std::string out;
  std::size_t i = 0;
  while (i < words.size()) {
    const CorpusWord& w = words[i];
    if (!w.is_marker) {
      out += w.text;
      ++i;
      continue;
    }
    if (is_whitespace_marker(w)) {
      out.append(run_marker_length(w.text), run_marker_char(w.text));
      ++i;
      continue;
    }
    if (w.text == kUnderscore) {
      out += '_';
      ++i;
      continue;
    }
    if (w.text == kCapitalized || w.text == kAllCaps) {
      std::vector<CorpusWord> pair(words.begin() + static_cast<std::ptrdiff_t>(i),
                                   words.begin() + static_cast<std::ptrdiff_t>(
                                                       std::min(i + 2, words.size())));
      out += unsplit_identifier(pair);
      i += 2;
      continue;
    }
    if (w.text == kWordOpen) {
      std::size_t j = i + 1;
      while (j < words.size() && !(words[j].is_marker && words[j].text == kWordClose)) ++j;
      if (j >= words.size()) {
        throw std::invalid_argument("identifier encoding: <w> without closing </w>");
      }
      std::vector<CorpusWord> block(words.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                    words.begin() + static_cast<std::ptrdiff_t>(j));
      if (block.empty()) throw std::invalid_argument("empty <w> block");
      const std::string& first = block.front().text;
      if (!block.front().is_marker &&
          (first.starts_with("//") || first.starts_with("/*"))) {
        out += decode_text_block(block, /*quoted=*/false);
      } else if (!block.front().is_marker && (first == "\"" || first == "'")) {
        out += decode_text_block(block, /*quoted=*/true);
      } else {
        std::vector<CorpusWord> full;
        full.push_back(marker_word(kWordOpen));
        for (auto& b : block) full.push_back(b);
        full.push_back(marker_word(kWordClose));
        out += unsplit_identifier(full);
      }
      i = j + 1;
      continue;
    }
    throw std::invalid_argument("cannot reconstruct from lossy marker " + w.text);
  }
  return out;
}

// --- configuration (de)serialization -------------------------------------

namespace detail {

inline std::string format_fraction(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

inline const std::vector<std::pair<TokenKind, std::string_view>>& kind_names() {
  static const std::vector<std::pair<TokenKind, std::string_view>> names = {
      {TokenKind::Identifier, "identifier"}, {TokenKind::Keyword, "keyword"},
      {TokenKind::NumberLiteral, "number"},  {TokenKind::StringLiteral, "string"},
      {TokenKind::CharLiteral, "char"},      {TokenKind::Comment, "comment"},
      {TokenKind::Whitespace, "whitespace"}, {TokenKind::Operator, "operator"},
      {TokenKind::Punctuation, "punctuation"}};
  return names;
}

inline TokenKind kind_from_name(std::string_view name) {
  for (const auto& [kind, n] : kind_names()) {
    if (n == name) return kind;
  }
  throw ConfigError("unknown token kind: " + std::string(name));
}

}  // namespace detail

inline std::string PipelineConfig::serialize() const {
  std::string out;
  out += "whitespace_policy=";
  out += whitespace_policy == WhitespacePolicy::KeepEach   ? "keep_each"
         : whitespace_policy == WhitespacePolicy::MergeRuns ? "merge_runs"
                                                            : "drop";
  out += "\ncomment_policy=";
  out += comment_policy == CommentPolicy::KeepAsWords ? "keep_as_words" : "placeholder";
  out += "\nstring_policy=";
  out += string_policy == StringPolicy::KeepAsWords ? "keep_as_words" : "placeholder";
  out += "\nnumber_policy=";
  switch (number_policy) {
    case NumberPolicy::Keep: out += "keep"; break;
    case NumberPolicy::PlaceholderAll: out += "placeholder_all"; break;
    case NumberPolicy::KeepSmall: out += "keep_small:" + std::to_string(number_threshold); break;
    case NumberPolicy::SplitDigits: out += "split_digits"; break;
  }
  out += "\nnonenglish_policy=";
  switch (nonenglish_policy) {
    case NonEnglishPolicy::Keep: out += "keep"; break;
    case NonEnglishPolicy::ReplaceToken: out += "replace_token"; break;
    case NonEnglishPolicy::ReplaceTokenAndFilterFiles:
      out += "replace_token_and_filter_files:" + detail::format_fraction(code_threshold) + ":" +
             detail::format_fraction(code_and_strings_threshold);
      break;
  }
  out += "\nsplit_policy=";
  switch (split_policy) {
    case SplitPolicy::Unsplit: out += "unsplit"; break;
    case SplitPolicy::SplitCaseEncoded: out += "split_case_encoded"; break;
    case SplitPolicy::SplitKeepCase: out += "split_keep_case"; break;
  }
  out += "\nmin_frequency=" + std::to_string(min_frequency_default);
  for (const auto& [kind, names] : detail::kind_names()) {
    if (auto it = min_frequency.find(kind); it != min_frequency.end()) {
      out += ",";
      out += names;
      out += ":" + std::to_string(it->second);
    }
  }
  out += "\n";
  return out;
}

inline PipelineConfig PipelineConfig::parse(std::string_view text) {
  PipelineConfig cfg;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "whitespace_policy") {
      if (value == "keep_each") cfg.whitespace_policy = WhitespacePolicy::KeepEach;
      else if (value == "merge_runs") cfg.whitespace_policy = WhitespacePolicy::MergeRuns;
      else if (value == "drop") cfg.whitespace_policy = WhitespacePolicy::Drop;
      else throw ConfigError("invalid value for whitespace_policy: " + value);
    } else if (key == "comment_policy") {
      if (value == "keep_as_words") cfg.comment_policy = CommentPolicy::KeepAsWords;
      else if (value == "placeholder") cfg.comment_policy = CommentPolicy::Placeholder;
      else throw ConfigError("invalid value for comment_policy: " + value);
    } else if (key == "string_policy") {
      if (value == "keep_as_words") cfg.string_policy = StringPolicy::KeepAsWords;
      else if (value == "placeholder") cfg.string_policy = StringPolicy::Placeholder;
      else throw ConfigError("invalid value for string_policy: " + value);
    } else if (key == "number_policy") {
      if (value == "keep") cfg.number_policy = NumberPolicy::Keep;
      else if (value == "placeholder_all") cfg.number_policy = NumberPolicy::PlaceholderAll;
      else if (value == "split_digits") cfg.number_policy = NumberPolicy::SplitDigits;
      else if (value.starts_with("keep_small")) {
        cfg.number_policy = NumberPolicy::KeepSmall;
        if (value.size() > 10 && value[10] == ':') {
          try {
            cfg.number_threshold = std::stoll(value.substr(11));
          } catch (...) {
            throw ConfigError("invalid value for number_policy: " + value);
          }
        } else if (value != "keep_small") {
          throw ConfigError("invalid value for number_policy: " + value);
        }
      } else {
        throw ConfigError("invalid value for number_policy: " + value);
      }
    } else if (key == "nonenglish_policy") {
      if (value == "keep") cfg.nonenglish_policy = NonEnglishPolicy::Keep;
      else if (value == "replace_token") cfg.nonenglish_policy = NonEnglishPolicy::ReplaceToken;
      else if (value.starts_with("replace_token_and_filter_files")) {
        cfg.nonenglish_policy = NonEnglishPolicy::ReplaceTokenAndFilterFiles;
        std::string_view rest = std::string_view(value).substr(30);
        if (!rest.empty()) {
          if (rest[0] != ':') throw ConfigError("invalid value for nonenglish_policy: " + value);
          rest.remove_prefix(1);
          const auto colon = rest.find(':');
          if (colon == std::string_view::npos) {
            throw ConfigError("invalid value for nonenglish_policy: " + value);
          }
          try {
            cfg.code_threshold = std::stod(std::string(rest.substr(0, colon)));
            cfg.code_and_strings_threshold = std::stod(std::string(rest.substr(colon + 1)));
          } catch (...) {
            throw ConfigError("invalid value for nonenglish_policy: " + value);
          }
        }
      } else {
        throw ConfigError("invalid value for nonenglish_policy: " + value);
      }
    } else if (key == "split_policy") {
      if (value == "unsplit") cfg.split_policy = SplitPolicy::Unsplit;
      else if (value == "split_case_encoded") cfg.split_policy = SplitPolicy::SplitCaseEncoded;
      else if (value == "split_keep_case") cfg.split_policy = SplitPolicy::SplitKeepCase;
      else throw ConfigError("invalid value for split_policy: " + value);
    } else if (key == "min_frequency") {
      std::string_view rest = value;
      bool first = true;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view entry = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        try {
          if (const auto colon = entry.find(':'); colon != std::string_view::npos) {
            cfg.min_frequency[detail::kind_from_name(entry.substr(0, colon))] =
                std::stoull(std::string(entry.substr(colon + 1)));
          } else if (first) {
            cfg.min_frequency_default = std::stoull(std::string(entry));
          } else {
            throw ConfigError("invalid value for min_frequency: " + value);
          }
        } catch (const ConfigError&) {
          throw;
        } catch (...) {
          throw ConfigError("invalid value for min_frequency: " + value);
        }
        first = false;
      }
    } else {
      throw ConfigError("unknown configuration key: " + key);
    }
  }
  return cfg;
}

}  // namespace codevocab::pipeline
