// SPDX-License-Identifier: Apache-2.0
//
// Count-based n-gram language model with Jelinek-Mercer interpolation down
// to the unigram and a uniform floor over the training vocabulary plus
// <unk>. Supports static and dynamic evaluation, an optional file-scoped
// cache mixture, entropy in bits, and mean reciprocal rank for completion.
//
// Words unseen in training are folded to <unk> before scoring (and before
// dynamic/cache updates), so no prediction ever gets probability zero as
// long as the interpolation weight stays below 1.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <string_view>
#include <vector>

#include "codevocab/io.hpp"
#include "codevocab/words.hpp"

namespace codevocab::ngram {

enum class Scenario { Static, Dynamic };

struct EvalResult {
  double entropy_bits = 0.0;
  std::string unit = "token";
  double mrr = 0.0;
  std::uint64_t n_units = 0;
};

struct EvalOptions {
  Scenario scenario = Scenario::Static;
  bool use_cache = false;
  double cache_gamma = 0.1;
  int mrr_cutoff = 10;
  std::string unit = "token";
  // Candidate cushion for exact top-`mrr_cutoff` ranking; must exceed the
  // cutoff so words outside the candidate set can never reach the top.
  int candidate_cushion = 16;
};

// File-scoped cache: recent word counts mixed into the model distribution
// with weight gamma. Cleared at every file boundary.
struct CacheState {
  std::map<std::uint32_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  void clear() {
    counts.clear();
    total = 0;
  }
  void add(std::uint32_t word) {
    ++counts[word];
    ++total;
  }
  double probability(std::uint32_t word) const {
    if (total == 0) return 0.0;
    auto it = counts.find(word);
    return it == counts.end() ? 0.0
                              : static_cast<double>(it->second) / static_cast<double>(total);
  }
};

class Model {
 public:
  Model(int order, double lambda) : order_(order), lambda_(lambda) {
    if (order < 1) throw ConfigError("n-gram order must be at least 1");
    if (!(lambda > 0.0 && lambda <= 1.0)) {
      throw ConfigError("interpolation weight must be in (0, 1]");
    }
    unk_id_ = intern(std::string(markers::kUnknown));
  }

  // Counting is shard-parallel when jobs > 1: each worker fits its own
  // shard and the count tries are merged. Merging is plain addition, so
  // the result does not depend on sharding or scheduling.
  static Model fit(const std::vector<std::vector<std::string>>& files, int order,
                   double lambda = 0.5, unsigned jobs = 1) {
    std::uint64_t units = 0;
    for (const auto& file : files) units += file.size();
    if (units == 0) throw ConfigError("cannot fit a language model on an empty corpus");
    if (jobs > 1 && files.size() > 1) {
      const std::size_t n_shards = std::min<std::size_t>(jobs, files.size());
      std::vector<Model> shards(n_shards, Model(order, lambda));
      std::vector<std::thread> threads;
      for (std::size_t s = 0; s < n_shards; ++s) {
        threads.emplace_back([&, s] {
          for (std::size_t f = s; f < files.size(); f += n_shards) {
            shards[s].count_file(files[f]);
          }
        });
      }
      for (auto& t : threads) t.join();
      Model model = std::move(shards[0]);
      for (std::size_t s = 1; s < n_shards; ++s) model.merge(shards[s]);
      return model;
    }
    Model model(order, lambda);
    for (const auto& file : files) model.count_file(file);
    return model;
  }

  // Adds another model's counts into this one (commutative up to word-id
  // renumbering, which persistence and queries never observe).
  void merge(const Model& other) {
    if (other.order_ != order_) throw ConfigError("cannot merge models of different order");
    merge_nodes(root_, other.root_, other);
  }

  int order() const { return order_; }
  double lambda() const { return lambda_; }
  std::uint64_t total_tokens() const { return root_.child_total; }
  std::size_t vocab_size() const { return root_.children.size(); }

  // Uniform-floor support: training vocabulary united with <unk>.
  std::size_t floor_size() const {
    return root_.children.contains(unk_id_) ? root_.children.size()
                                            : root_.children.size() + 1;
  }

  // Maps a word to its id, folding everything unseen in training to <unk>.
  std::uint32_t map_word(std::string_view word) const {
    auto it = ids_.find(std::string(word));
    if (it == ids_.end() || !root_.children.contains(it->second)) return unk_id_;
    return it->second;
  }

  // Interpolated probability of `word` after `context` (most recent word
  // last). Context longer than order-1 is truncated from the front.
  double probability(std::uint32_t word, const std::vector<std::uint32_t>& context) const {
    double p = 1.0 / static_cast<double>(floor_size());
    const std::size_t max_len =
        std::min(context.size(), static_cast<std::size_t>(order_ - 1));
    for (std::size_t len = 0; len <= max_len; ++len) {
      const Node* node = walk(context, len);
      if (node == nullptr || node->child_total == 0) continue;
      auto it = node->children.find(word);
      const double ml = it == node->children.end()
                            ? 0.0
                            : static_cast<double>(it->second.count) /
                                  static_cast<double>(node->child_total);
      p = lambda_ * ml + (1.0 - lambda_) * p;
    }
    return p;
  }

  // Count-table lookup, mostly for tests: occurrences of the exact k-gram.
  std::uint64_t gram_count(const std::vector<std::string>& gram) const {
    const Node* node = &root_;
    for (const auto& word : gram) {
      auto id = ids_.find(word);
      if (id == ids_.end()) return 0;
      auto it = node->children.find(id->second);
      if (it == node->children.end()) return 0;
      node = &it->second;
    }
    return node->count;
  }

  const std::string& word_text(std::uint32_t id) const { return words_[id]; }

  EvalResult evaluate(const std::vector<std::vector<std::string>>& files,
                      const EvalOptions& opts) const;

  std::string save() const;
  static Model load(std::string_view content);

 private:
  struct Node {
    std::uint64_t count = 0;
    std::uint64_t child_total = 0;
    std::map<std::uint32_t, Node> children;
  };

  std::uint32_t intern(const std::string& word) {
    auto [it, inserted] = ids_.try_emplace(word, static_cast<std::uint32_t>(words_.size()));
    if (inserted) words_.push_back(word);
    return it->second;
  }

  void count_file(const std::vector<std::string>& file) {
    std::vector<std::uint32_t> ids;
    ids.reserve(file.size());
    for (const auto& word : file) ids.push_back(intern(word));
    for (std::size_t i = 0; i < ids.size(); ++i) add_grams_ending_at(ids, i);
  }

  void merge_nodes(Node& mine, const Node& theirs, const Model& other) {
    mine.count += theirs.count;
    mine.child_total += theirs.child_total;
    for (const auto& [id, child] : theirs.children) {
      merge_nodes(mine.children[intern(other.words_[id])], child, other);
    }
  }

  // Records every k-gram (k <= order) ending at position i.
  void add_grams_ending_at(const std::vector<std::uint32_t>& ids, std::size_t i) {
    const auto max_len = std::min<std::size_t>(order_, i + 1);
    for (std::size_t len = 1; len <= max_len; ++len) {
      Node* node = &root_;
      for (std::size_t pos = i - len + 1; pos < i; ++pos) {
        node = &node->children[ids[pos]];
      }
      ++node->child_total;
      ++node->children[ids[i]].count;
    }
  }

  // Node reached by the last `len` words of `context`; null when unseen.
  const Node* walk(const std::vector<std::uint32_t>& context, std::size_t len) const {
    const Node* node = &root_;
    for (std::size_t i = context.size() - len; i < context.size(); ++i) {
      auto it = node->children.find(context[i]);
      if (it == node->children.end()) return nullptr;
      node = &it->second;
    }
    return node;
  }

  int order_;
  double lambda_;
  std::uint32_t unk_id_ = 0;
  Node root_;
  std::map<std::string, std::uint32_t> ids_;
  std::vector<std::string> words_;

  friend struct Evaluator;
};

// Converts a subword-level entropy to word level by scaling with the
// subtoken/token ratio.
inline double word_entropy(double subword_entropy, std::uint64_t n_subtokens,
                           std::uint64_t n_tokens) {
  if (n_tokens == 0) throw ConfigError("word_entropy: token count must be positive");
  return subword_entropy * static_cast<double>(n_subtokens) / static_cast<double>(n_tokens);
}

// Mean of 1/rank of the truth inside each ranked candidate list; a truth
// absent from the list or ranked beyond the cutoff scores zero.
inline double mrr(const std::vector<std::vector<std::string>>& predictions,
                  const std::vector<std::string>& truths, int cutoff = 10) {
  if (predictions.size() != truths.size()) {
    throw ConfigError("mrr: predictions and truths differ in length");
  }
  if (predictions.empty()) throw ConfigError("mrr: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto& ranked = predictions[i];
    const auto limit = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(cutoff));
    for (std::size_t r = 0; r < limit; ++r) {
      if (ranked[r] == truths[i]) {
        sum += 1.0 / static_cast<double>(r + 1);
        break;
      }
    }
  }
  return sum / static_cast<double>(predictions.size());
}

// --- evaluation -----------------------------------------------------------

struct Evaluator {
  // Mutable copy for the dynamic scenario; static evaluation copies too but
  // never updates, which is cheap relative to scoring.
  Model model;
  EvalOptions opts;

  explicit Evaluator(const Model& m, const EvalOptions& o) : model(m), opts(o) {}

  // (count desc, id asc): the first entries are the strongest unigram
  // candidates outside any seen higher-order context.
  struct UnigramOrder {
    bool operator()(const std::pair<std::uint64_t, std::uint32_t>& a,
                    const std::pair<std::uint64_t, std::uint32_t>& b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    }
  };
  std::set<std::pair<std::uint64_t, std::uint32_t>, UnigramOrder> unigram_index;

  void build_unigram_index() {
    unigram_index.clear();
    for (const auto& [id, node] : model.root_.children) {
      unigram_index.insert({node.count, id});
    }
  }

  double mixed_probability(std::uint32_t word, const std::vector<std::uint32_t>& ctx,
                           const CacheState* cache) const {
    const double p = model.probability(word, ctx);
    if (cache == nullptr || cache->total == 0) return p;
    return (1.0 - opts.cache_gamma) * p + opts.cache_gamma * cache->probability(word);
  }

  // Reciprocal rank of `truth` in the mixed distribution, exact for ranks
  // up to the cutoff. Candidates are the strongest unigrams plus every
  // continuation of a seen context suffix plus the cache contents; any
  // word outside that set is dominated by at least `cushion` candidates.
  double reciprocal_rank(std::uint32_t truth, const std::vector<std::uint32_t>& ctx,
                         const CacheState* cache) const {
    std::set<std::uint32_t> candidates;
    // The cushion must exceed the cutoff: every excluded word is dominated
    // by at least this many candidates, so ranks up to the cutoff are exact.
    const int cushion_target = std::max(opts.candidate_cushion, opts.mrr_cutoff + 1);
    int cushion = 0;
    for (const auto& [count, id] : unigram_index) {
      candidates.insert(id);
      if (++cushion >= cushion_target) break;
    }
    const std::size_t max_len =
        std::min(ctx.size(), static_cast<std::size_t>(model.order_ - 1));
    for (std::size_t len = 1; len <= max_len; ++len) {
      const Model::Node* node = model.walk(ctx, len);
      if (node == nullptr) continue;
      for (const auto& [id, child] : node->children) candidates.insert(id);
    }
    if (cache != nullptr) {
      for (const auto& [id, count] : cache->counts) candidates.insert(id);
    }
    candidates.insert(truth);

    const double p_truth = mixed_probability(truth, ctx, cache);
    int rank = 1;
    for (std::uint32_t c : candidates) {
      if (c == truth) continue;
      const double p = mixed_probability(c, ctx, cache);
      if (p > p_truth || (p == p_truth && c < truth)) {
        if (++rank > opts.mrr_cutoff) return 0.0;
      }
    }
    return 1.0 / static_cast<double>(rank);
  }

  EvalResult run(const std::vector<std::vector<std::string>>& files) {
    build_unigram_index();
    double log_sum = 0.0;
    double rr_sum = 0.0;
    std::uint64_t n = 0;
    CacheState cache;
    for (const auto& file : files) {
      cache.clear();
      std::vector<std::uint32_t> ids;
      ids.reserve(file.size());
      for (const auto& word : file) ids.push_back(model.map_word(word));
      std::vector<std::uint32_t> ctx;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const CacheState* cache_ptr = opts.use_cache ? &cache : nullptr;
        const double p = mixed_probability(ids[i], ctx, cache_ptr);
        log_sum += -std::log2(p);
        rr_sum += reciprocal_rank(ids[i], ctx, cache_ptr);
        ++n;
        if (opts.scenario == Scenario::Dynamic) {
          model.add_grams_ending_at(ids, i);
          auto it = model.root_.children.find(ids[i]);
          unigram_index.erase({it->second.count - 1, ids[i]});
          unigram_index.insert({it->second.count, ids[i]});
        }
        if (opts.use_cache) cache.add(ids[i]);
        ctx.push_back(ids[i]);
        if (ctx.size() > static_cast<std::size_t>(model.order_ - 1)) {
          ctx.erase(ctx.begin());
        }
      }
    }
    EvalResult result;
    result.unit = opts.unit;
    result.n_units = n;
    result.entropy_bits = n == 0 ? 0.0 : log_sum / static_cast<double>(n);
    result.mrr = n == 0 ? 0.0 : rr_sum / static_cast<double>(n);
    return result;
  }
};

inline EvalResult Model::evaluate(const std::vector<std::vector<std::string>>& files,
                                  const EvalOptions& opts) const {
  Evaluator evaluator(*this, opts);
  return evaluator.run(files);
}

// --- persistence ----------------------------------------------------------
//
// Versioned text dump: a header, then one line per recorded k-gram,
// `count<TAB>w1 w2 ... wk`, grouped by k ascending and sorted by the word
// strings within each k. Loading and re-saving is byte-identical.

inline constexpr std::string_view kModelHeader = "#ngram-model v1";

namespace detail {

struct DumpEntry {
  std::vector<std::string> gram;
  std::uint64_t count;
};

}  // namespace detail

inline std::string Model::save() const {
  std::string out(kModelHeader);
  out += "\norder\t" + std::to_string(order_);
  char lam[32];
  std::snprintf(lam, sizeof(lam), "%g", lambda_);
  out += "\nlambda\t";
  out += lam;
  out += '\n';

  std::vector<detail::DumpEntry> entries;
  std::vector<std::string> path;
  auto dfs = [&](auto&& self, const Node& node) -> void {
    if (!path.empty()) entries.push_back({path, node.count});
    for (const auto& [id, child] : node.children) {
      path.push_back(words_[id]);
      self(self, child);
      path.pop_back();
    }
  };
  dfs(dfs, root_);
  std::sort(entries.begin(), entries.end(),
            [](const detail::DumpEntry& a, const detail::DumpEntry& b) {
              if (a.gram.size() != b.gram.size()) return a.gram.size() < b.gram.size();
              return a.gram < b.gram;
            });
  for (const auto& e : entries) {
    out += std::to_string(e.count);
    out += '\t';
    for (std::size_t i = 0; i < e.gram.size(); ++i) {
      if (i > 0) out += ' ';
      out += e.gram[i];
    }
    out += '\n';
  }
  return out;
}

inline Model Model::load(std::string_view content) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  int order = 0;
  double lambda = 0.5;
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> grams;
  while (pos < content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kModelHeader) throw IoError("not an n-gram model file (missing header)");
      continue;
    }
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw IoError("malformed model line " + std::to_string(line_no));
    }
    const std::string_view key = line.substr(0, tab);
    const std::string_view rest = line.substr(tab + 1);
    if (key == "order") {
      order = std::stoi(std::string(rest));
      continue;
    }
    if (key == "lambda") {
      lambda = std::stod(std::string(rest));
      continue;
    }
    std::uint64_t count = 0;
    try {
      count = std::stoull(std::string(key));
    } catch (...) {
      throw IoError("malformed model line " + std::to_string(line_no));
    }
    std::vector<std::string> gram;
    std::size_t i = 0;
    while (i <= rest.size()) {
      const auto space = rest.find(' ', i);
      const auto end = space == std::string_view::npos ? rest.size() : space;
      gram.emplace_back(rest.substr(i, end - i));
      i = end + 1;
      if (space == std::string_view::npos) break;
    }
    grams.emplace_back(std::move(gram), count);
  }
  if (order < 1) throw IoError("model file missing order");
  Model model(order, lambda);
  for (const auto& [gram, count] : grams) {
    Node* node = &model.root_;
    for (std::size_t i = 0; i + 1 < gram.size(); ++i) {
      node = &node->children[model.intern(gram[i])];
    }
    node->children[model.intern(gram.back())].count = count;
  }
  // child_total is derivable: the sum of the children's counts.
  auto fix = [&](auto&& self, Node& node) -> void {
    node.child_total = 0;
    for (auto& [id, child] : node.children) {
      node.child_total += child.count;
      self(self, child);
    }
  };
  fix(fix, model.root_);
  return model;
}

}  // namespace codevocab::ngram
