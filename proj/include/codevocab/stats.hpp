// SPDX-License-Identifier: Apache-2.0
//
// Vocabulary metrics over tokenized corpora: word frequencies, the minimal
// frequency threshold that brings vocabulary under a target size (with the
// resulting out-of-vocabulary fraction), vocabulary growth curves, and
// config-vs-config comparison rows.
//
// Frequencies are keyed by the escaped on-disk word form, so a structural
// marker like <w> and a source word that happens to read "<w>" stay
// distinct vocabulary entries.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "codevocab/io.hpp"
#include "codevocab/shuffle.hpp"
#include "codevocab/words.hpp"

namespace codevocab::stats {

struct VocabStats {
  std::map<std::string, std::uint64_t> frequency;  // escaped word -> count
  std::uint64_t total = 0;

  std::uint64_t vocab_size() const { return frequency.size(); }
  std::uint64_t total_tokens() const { return total; }

  void add_word(std::string_view escaped) {
    ++frequency[std::string(escaped)];
    ++total;
  }

  void add_words(const std::vector<CorpusWord>& words) {
    for (const CorpusWord& w : words) add_word(escape_word(w));
  }

  // Streams one corpus file: memory stays proportional to the vocabulary.
  // Malformed escapes raise IoError with file and line.
  void add_corpus_content(std::string_view content, std::string_view where) {
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
      const std::string_view raw = content.substr(i, j - i);
      try {
        unescape_word(raw);  // validation only; the raw form is the key
      } catch (const IoError& e) {
        throw IoError(std::string(where) + ":" + std::to_string(line) + ": " + e.what());
      }
      add_word(raw);
      i = j;
    }
  }

  void merge(const VocabStats& other) {
    for (const auto& [word, count] : other.frequency) frequency[word] += count;
    total += other.total;
  }

  std::uint64_t marker_vocab() const {
    std::uint64_t n = 0;
    for (const auto& [word, count] : frequency) {
      if (is_marker_word(word)) ++n;
    }
    return n;
  }

  std::uint64_t marker_tokens() const {
    std::uint64_t n = 0;
    for (const auto& [word, count] : frequency) {
      if (is_marker_word(word)) n += count;
    }
    return n;
  }

  // Copy without structural markers, for marker-excluded reports.
  VocabStats without_markers() const {
    VocabStats out;
    for (const auto& [word, count] : frequency) {
      if (!is_marker_word(word)) {
        out.frequency.emplace(word, count);
        out.total += count;
      }
    }
    return out;
  }
};

struct OovThreshold {
  std::uint64_t k = 1;         // minimal threshold reaching the target
  double oov_fraction = 0.0;   // share of tokens that fall below k
};

// Minimal k such that keeping only words with count >= k leaves at most
// `target_vocab` words; oov_fraction is the share of corpus tokens those
// dropped words account for.
inline OovThreshold oov_threshold(const VocabStats& stats, std::uint64_t target_vocab = 100000) {
  if (target_vocab < 1) throw ConfigError("target vocabulary must be at least 1");
  if (stats.vocab_size() <= target_vocab) return {1, 0.0};

  // words_at[c] / tokens_at[c]: number of distinct words and their token
  // mass with exactly count c.
  std::map<std::uint64_t, std::uint64_t> words_at;
  std::map<std::uint64_t, std::uint64_t> tokens_at;
  for (const auto& [word, count] : stats.frequency) {
    ++words_at[count];
    tokens_at[count] += count;
  }
  std::uint64_t survivors = stats.vocab_size();
  std::uint64_t dropped_tokens = 0;
  for (const auto& [count, n_words] : words_at) {
    // Raising k to count+1 drops every word with exactly `count`.
    survivors -= n_words;
    dropped_tokens += tokens_at[count];
    if (survivors <= target_vocab) {
      const double frac = stats.total == 0
                              ? 0.0
                              : static_cast<double>(dropped_tokens) /
                                    static_cast<double>(stats.total);
      return {count + 1, frac};
    }
  }
  return {words_at.rbegin()->first + 1,
          stats.total == 0 ? 0.0 : 1.0};  // everything dropped
}

struct GrowthCurve {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;  // (n_projects, vocab)
  std::uint64_t order_seed = 0;
};

// Cumulative distinct-word counts over a seeded project order, sampled at
// the requested fractions of the project list (each fraction f maps to the
// first ceil(f * n) projects).
inline GrowthCurve growth_curve(
    const std::vector<std::pair<std::string, std::set<std::string>>>& project_vocabs,
    const std::vector<double>& sample_points, std::uint64_t seed) {
  for (double f : sample_points) {
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("growth sample points must be in (0,1]");
  }
  std::vector<std::string> ids;
  ids.reserve(project_vocabs.size());
  for (const auto& [id, vocab] : project_vocabs) ids.push_back(id);
  const auto order = seeded_permutation(ids, seed);

  const std::size_t n = project_vocabs.size();
  std::vector<std::uint64_t> cumulative(n, 0);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& word : project_vocabs[order[i]].second) seen.insert(word);
    cumulative[i] = seen.size();
  }

  GrowthCurve curve;
  curve.order_seed = seed;
  for (double f : sample_points) {
    const auto take = static_cast<std::size_t>(
        std::min<double>(static_cast<double>(n), std::ceil(f * static_cast<double>(n))));
    if (take == 0) continue;
    curve.samples.emplace_back(take, cumulative[take - 1]);
  }
  return curve;
}

inline std::string render_growth_csv(const GrowthCurve& curve) {
  std::string out = "n_projects,vocab\n";
  for (const auto& [n, vocab] : curve.samples) {
    out += std::to_string(n) + "," + std::to_string(vocab) + "\n";
  }
  return out;
}

struct CompareRow {
  double vocab_ratio = 1.0;
  double tokens_ratio = 1.0;
};

inline CompareRow compare_configs(const VocabStats& baseline, const VocabStats& variant) {
  if (baseline.total_tokens() == 0) throw ConfigError("baseline has zero tokens");
  CompareRow row;
  row.vocab_ratio = baseline.vocab_size() == 0
                        ? 0.0
                        : static_cast<double>(variant.vocab_size()) /
                              static_cast<double>(baseline.vocab_size());
  row.tokens_ratio = static_cast<double>(variant.total_tokens()) /
                     static_cast<double>(baseline.total_tokens());
  return row;
}

// One Table-2-style report row. Ratios are against a baseline report
// (1.00 against itself).
struct StatsReport {
  std::string config;
  std::uint64_t vocab = 0;
  std::uint64_t tokens = 0;
  std::uint64_t marker_vocab = 0;
  std::uint64_t marker_tokens = 0;
  std::uint64_t k_100k = 1;
  double oov_fraction = 0.0;
  double vocab_ratio = 1.0;
  double tokens_ratio = 1.0;
  std::uint64_t target_vocab = 100000;
  bool include_markers = true;

  static constexpr std::string_view kCsvHeader =
      "config,vocab,vocab_ratio,tokens,tokens_ratio,k_100k,oov_pct";

  std::string csv_row() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s,%llu,%.2f,%llu,%.2f,%llu,%.2f", config.c_str(),
                  static_cast<unsigned long long>(vocab), vocab_ratio,
                  static_cast<unsigned long long>(tokens), tokens_ratio,
                  static_cast<unsigned long long>(k_100k), oov_fraction * 100.0);
    return buf;
  }

  std::string csv() const {
    return std::string(kCsvHeader) + "\n" + csv_row() + "\n";
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"config", config},
                          {"vocab", vocab},
                          {"tokens", tokens},
                          {"marker_vocab", marker_vocab},
                          {"marker_tokens", marker_tokens},
                          {"k_100k", k_100k},
                          {"oov_pct", oov_fraction * 100.0},
                          {"vocab_ratio", vocab_ratio},
                          {"tokens_ratio", tokens_ratio},
                          {"target_vocab", target_vocab},
                          {"include_markers", include_markers}};
  }

  static StatsReport from_json(const nlohmann::json& j) {
    StatsReport r;
    r.config = j.at("config").get<std::string>();
    r.vocab = j.at("vocab").get<std::uint64_t>();
    r.tokens = j.at("tokens").get<std::uint64_t>();
    r.marker_vocab = j.at("marker_vocab").get<std::uint64_t>();
    r.marker_tokens = j.at("marker_tokens").get<std::uint64_t>();
    r.k_100k = j.at("k_100k").get<std::uint64_t>();
    r.oov_fraction = j.at("oov_pct").get<double>() / 100.0;
    r.vocab_ratio = j.at("vocab_ratio").get<double>();
    r.tokens_ratio = j.at("tokens_ratio").get<double>();
    r.target_vocab = j.at("target_vocab").get<std::uint64_t>();
    r.include_markers = j.at("include_markers").get<bool>();
    return r;
  }
};

inline StatsReport build_report(std::string config, const VocabStats& stats,
                                std::uint64_t target_vocab = 100000,
                                bool include_markers = true) {
  StatsReport r;
  r.config = std::move(config);
  r.marker_vocab = stats.marker_vocab();
  r.marker_tokens = stats.marker_tokens();
  r.target_vocab = target_vocab;
  r.include_markers = include_markers;
  if (include_markers) {
    r.vocab = stats.vocab_size();
    r.tokens = stats.total_tokens();
    const auto oov = oov_threshold(stats, target_vocab);
    r.k_100k = oov.k;
    r.oov_fraction = oov.oov_fraction;
  } else {
    const VocabStats filtered = stats.without_markers();
    r.vocab = filtered.vocab_size();
    r.tokens = filtered.total_tokens();
    const auto oov = oov_threshold(filtered, target_vocab);
    r.k_100k = oov.k;
    r.oov_fraction = oov.oov_fraction;
  }
  return r;
}

}  // namespace codevocab::stats
