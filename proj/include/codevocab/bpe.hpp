// SPDX-License-Identifier: Apache-2.0
//
// Byte-pair encoding over a word-frequency table. Words start as UTF-8
// code points plus a </t> end-of-word symbol that takes part in merges, so
// suffixes like "ing</t>" can form. Merges never cross word boundaries.
// Ties between equally frequent pairs break lexicographically on
// (left, right), which makes training deterministic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "codevocab/io.hpp"
#include "codevocab/words.hpp"

namespace codevocab::bpe {

using WordFrequency = std::map<std::string, std::uint64_t>;

struct Model {
  std::vector<std::pair<std::string, std::string>> merges;  // training order
  std::set<std::string> alphabet;                           // initial symbols
  std::string end_marker = std::string(markers::kBpeEnd);
};

struct SubwordSequence {
  std::string word;
  std::vector<std::string> pieces;
};

// Splits a string into UTF-8 code points; bytes of an invalid sequence fall
// back to one-byte symbols.
inline std::vector<std::string> utf8_symbols(std::string_view word) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    const auto byte = static_cast<unsigned char>(word[i]);
    std::size_t len = 1;
    if (byte >= 0xF0) len = 4;
    else if (byte >= 0xE0) len = 3;
    else if (byte >= 0xC0) len = 2;
    std::size_t j = i + 1;
    while (j < word.size() && j < i + len &&
           (static_cast<unsigned char>(word[j]) & 0xC0) == 0x80) {
      ++j;
    }
    out.emplace_back(word.substr(i, j - i));
    i = j;
  }
  return out;
}

namespace detail {

using Pair = std::pair<std::string, std::string>;

// Ordered by count descending, then (left, right) ascending, so *begin() is
// always the pair the next merge must pick.
struct BestPairOrder {
  bool operator()(const std::tuple<std::uint64_t, Pair>& a,
                  const std::tuple<std::uint64_t, Pair>& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  }
};

struct TrainState {
  std::vector<std::vector<std::string>> words;
  std::vector<std::uint64_t> freqs;
  std::map<Pair, std::int64_t> pair_counts;
  // Words a pair has ever occurred in; entries may go stale after merges,
  // merge_in_word simply finds nothing to do then.
  std::map<Pair, std::set<std::size_t>> pair_words;
  std::set<std::tuple<std::uint64_t, Pair>, BestPairOrder> index;

  void bump(const Pair& p, std::size_t word_id, std::int64_t delta) {
    auto it = pair_counts.find(p);
    const std::int64_t old_count = it == pair_counts.end() ? 0 : it->second;
    if (old_count > 0) index.erase({static_cast<std::uint64_t>(old_count), p});
    const std::int64_t new_count = old_count + delta;
    if (new_count > 0) {
      pair_counts[p] = new_count;
      index.insert({static_cast<std::uint64_t>(new_count), p});
      if (delta > 0) pair_words[p].insert(word_id);
    } else {
      pair_counts.erase(p);
    }
  }
};

// Rewrites one symbol sequence, replacing every (left, right) occurrence
// left to right, then applies the pair-count difference between the old
// and new sequence. Only words containing the pair are ever touched, so
// counts stay exact without a full recount.
inline void merge_in_word(TrainState& st, std::size_t word_id, const Pair& target,
                          const std::string& merged) {
  std::vector<std::string>& w = st.words[word_id];
  const auto f = static_cast<std::int64_t>(st.freqs[word_id]);
  std::vector<std::string> out;
  out.reserve(w.size());
  std::size_t i = 0;
  bool changed = false;
  while (i < w.size()) {
    if (i + 1 < w.size() && w[i] == target.first && w[i + 1] == target.second) {
      out.push_back(merged);
      i += 2;
      changed = true;
    } else {
      out.push_back(w[i]);
      ++i;
    }
  }
  if (!changed) return;
  std::map<Pair, std::int64_t> delta;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) delta[{w[k], w[k + 1]}] -= 1;
  for (std::size_t k = 0; k + 1 < out.size(); ++k) delta[{out[k], out[k + 1]}] += 1;
  for (const auto& [p, d] : delta) {
    if (d != 0) st.bump(p, word_id, d * f);
  }
  w = std::move(out);
}

}  // namespace detail

// Trains a model by repeatedly merging the most frequent adjacent symbol
// pair. Marker and placeholder words must already be excluded from the
// frequency table. Stops early when no pair occurs at least twice.
inline Model train(const WordFrequency& frequencies, std::size_t n_merges) {
  Model model;
  detail::TrainState st;
  st.words.reserve(frequencies.size());
  for (const auto& [word, freq] : frequencies) {
    auto symbols = utf8_symbols(word);
    symbols.push_back(model.end_marker);
    for (const auto& s : symbols) model.alphabet.insert(s);
    st.words.push_back(std::move(symbols));
    st.freqs.push_back(freq);
  }
  for (std::size_t w = 0; w < st.words.size(); ++w) {
    for (std::size_t i = 0; i + 1 < st.words[w].size(); ++i) {
      st.bump({st.words[w][i], st.words[w][i + 1]}, w,
              static_cast<std::int64_t>(st.freqs[w]));
    }
  }
  for (std::size_t m = 0; m < n_merges; ++m) {
    if (st.index.empty()) break;
    const auto [count, pair] = *st.index.begin();
    if (count < 2) break;
    const std::string merged = pair.first + pair.second;
    // Copy: merge_in_word mutates pair_words while iterating candidates.
    const std::set<std::size_t> candidates = st.pair_words[pair];
    for (std::size_t word_id : candidates) {
      detail::merge_in_word(st, word_id, pair, merged);
    }
    st.pair_words.erase(pair);
    model.merges.push_back(pair);
  }
  return model;
}

// Splits `word` into code points + end marker, then replays the merges in
// training order, each applied exhaustively left to right. Unknown
// characters stay as singleton pieces.
inline SubwordSequence encode(std::string_view word, const Model& model) {
  SubwordSequence seq;
  seq.word = std::string(word);
  seq.pieces = utf8_symbols(word);
  seq.pieces.push_back(model.end_marker);
  for (const auto& [left, right] : model.merges) {
    if (seq.pieces.size() < 2) break;
    std::vector<std::string> out;
    out.reserve(seq.pieces.size());
    std::size_t i = 0;
    while (i < seq.pieces.size()) {
      if (i + 1 < seq.pieces.size() && seq.pieces[i] == left && seq.pieces[i + 1] == right) {
        out.push_back(left + right);
        i += 2;
      } else {
        out.push_back(std::move(seq.pieces[i]));
        ++i;
      }
    }
    seq.pieces = std::move(out);
  }
  return seq;
}

// Inverse of encode: concatenation minus the end marker.
inline std::string decode(const SubwordSequence& seq,
                          std::string_view end_marker = markers::kBpeEnd) {
  std::string out;
  for (const auto& p : seq.pieces) out += p;
  if (out.size() < end_marker.size() ||
      std::string_view(out).substr(out.size() - end_marker.size()) != end_marker) {
    throw std::invalid_argument("subword sequence does not end with " + std::string(end_marker));
  }
  out.resize(out.size() - end_marker.size());
  return out;
}

// Frequency of every subword after encoding the corpus with the model.
inline std::map<std::string, std::uint64_t> vocab_of(const Model& model,
                                                     const WordFrequency& corpus) {
  std::map<std::string, std::uint64_t> vocab;
  for (const auto& [word, freq] : corpus) {
    for (const auto& piece : encode(word, model).pieces) {
      vocab[piece] += freq;
    }
  }
  return vocab;
}

// Fraction of the derived vocabulary whose count is at least `threshold`.
inline double frequency_coverage(const std::map<std::string, std::uint64_t>& vocab,
                                 std::uint64_t threshold) {
  if (vocab.empty()) return 0.0;
  std::uint64_t covered = 0;
  for (const auto& [piece, count] : vocab) {
    if (count >= threshold) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(vocab.size());
}

inline constexpr std::string_view kMergesHeader = "#bpe-merges v1";

inline std::string render_merges(const Model& model) {
  std::string out(kMergesHeader);
  out += '\n';
  for (const auto& [left, right] : model.merges) {
    out += left;
    out += ' ';
    out += right;
    out += '\n';
  }
  return out;
}

inline Model parse_merges(std::string_view content) {
  Model model;
  std::size_t pos = 0;
  bool saw_header = false;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kMergesHeader) throw IoError("not a merges file (missing header)");
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string_view::npos) {
      throw IoError("malformed merge at line " + std::to_string(line_no));
    }
    model.merges.emplace_back(std::string(line.substr(0, space)),
                              std::string(line.substr(space + 1)));
  }
  if (!saw_header) throw IoError("not a merges file (missing header)");
  return model;
}

// `subword<TAB>count`, by count descending then subword ascending.
inline std::string render_vocab(const std::map<std::string, std::uint64_t>& vocab) {
  std::vector<std::pair<std::string, std::uint64_t>> rows(vocab.begin(), vocab.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [piece, count] : rows) {
    out += piece;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

// Builds the training frequency table from corpus words, excluding every
// structural marker and placeholder.
inline void count_for_training(const std::vector<CorpusWord>& words, WordFrequency& freq) {
  for (const CorpusWord& w : words) {
    if (!w.is_marker) ++freq[w.text];
  }
}

}  // namespace codevocab::bpe
