// SPDX-License-Identifier: Apache-2.0
//
// Batch front end: reproducible corpus experiments driven by a manifest.
// Exit codes: 0 success, 1 I/O or missing input, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "codevocab/bpe.hpp"
#include "codevocab/corpus.hpp"
#include "codevocab/io.hpp"
#include "codevocab/lexer.hpp"
#include "codevocab/manifest.hpp"
#include "codevocab/ngram.hpp"
#include "codevocab/pipeline.hpp"
#include "codevocab/stats.hpp"
#include "codevocab/words.hpp"

namespace fs = std::filesystem;
using namespace codevocab;

namespace {

struct Options {
  std::string manifest_path;
  std::string out_override;
  std::optional<std::uint64_t> seed_override;
  unsigned jobs = 1;
};

struct Context {
  ExperimentManifest manifest;
  fs::path out;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

Context make_context(const Options& opts) {
  Context ctx;
  ctx.manifest = ExperimentManifest::load(opts.manifest_path);
  ctx.out = opts.out_override.empty() ? ctx.manifest.output_dir : fs::path(opts.out_override);
  ctx.seed = opts.seed_override.value_or(ctx.manifest.seed);
  ctx.jobs = opts.jobs == 0 ? 1 : opts.jobs;
  return ctx;
}

fs::path splits_path(const Context& ctx) { return ctx.out / "splits.tsv"; }
fs::path config_echo_path(const Context& ctx) { return ctx.out / "config.echo"; }
fs::path filtered_path(const Context& ctx) { return ctx.out / "filtered_files.tsv"; }
fs::path corpus_path(const Context& ctx, const std::string& name) { return ctx.out / name; }
fs::path merges_path(const Context& ctx) { return ctx.out / "bpe" / "merges.txt"; }
fs::path bpe_vocab_path(const Context& ctx) { return ctx.out / "bpe" / "vocab.tsv"; }
fs::path reports_path(const Context& ctx) { return ctx.out / "reports"; }
fs::path lm_model_path(const Context& ctx) { return ctx.out / "lm" / "model.txt"; }

void log_stage(const std::string& stage, std::size_t n_files, double seconds) {
  std::fprintf(stderr, "[%s] %zu files in %.2fs (%.1f files/s)\n", stage.c_str(), n_files,
               seconds, seconds > 0 ? static_cast<double>(n_files) / seconds : 0.0);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned n_threads = std::min<unsigned>(jobs, static_cast<unsigned>(n));
  threads.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

corpus::ProjectSet prepare_corpus(const Context& ctx) {
  std::vector<std::string> warnings;
  auto ps = corpus::ingest(ctx.manifest.corpus_root, ctx.manifest.extensions, &warnings);
  for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  auto [deduped, index] = corpus::dedup(ps, ctx.jobs);
  std::fprintf(stderr, "[ingest] %zu projects, %zu files (%llu duplicates removed)\n",
               deduped.projects.size(), deduped.file_count(),
               static_cast<unsigned long long>(index.duplicate_count));
  return corpus::split(std::move(deduped), ctx.manifest.train_ratio,
                       ctx.manifest.validation_ratio, ctx.manifest.test_ratio, ctx.seed);
}

pipeline::PipelineConfig load_pipeline_config(const Context& ctx) {
  if (ctx.manifest.pipeline_config.empty()) return pipeline::PipelineConfig{};
  return pipeline::PipelineConfig::parse(read_file(ctx.manifest.pipeline_config));
}

int cmd_ingest(const Options& opts) {
  const Context ctx = make_context(opts);
  const auto ps = prepare_corpus(ctx);
  write_file(splits_path(ctx), corpus::render_split_manifest(ps));
  std::cout << splits_path(ctx).string() << "\n";
  return 0;
}

struct FileTask {
  corpus::Split split;
  std::string project;
  fs::path source;
  fs::path rel;  // path inside the project
};

std::vector<FileTask> collect_tasks(const corpus::ProjectSet& ps, const fs::path& root) {
  std::vector<FileTask> tasks;
  for (const auto& project : ps.projects) {
    const fs::path project_dir = root / project.id;
    for (const auto& file : project.files) {
      tasks.push_back({project.split, project.id, file,
                       fs::relative(file, project_dir)});
    }
  }
  return tasks;
}

int cmd_preprocess(const Options& opts) {
  const Context ctx = make_context(opts);
  const auto config = load_pipeline_config(ctx);
  const auto ps = prepare_corpus(ctx);
  write_file(splits_path(ctx), corpus::render_split_manifest(ps));
  write_file(config_echo_path(ctx), config.serialize());

  const auto tasks = collect_tasks(ps, ctx.manifest.corpus_root);
  Stopwatch watch;

  auto run_one = [&](const FileTask& task) -> std::optional<std::vector<CorpusWord>> {
    const std::string content = normalize_newlines(read_file(task.source));
    std::vector<std::string> warnings;
    const auto tokens = lexer::lex(content, &warnings);
    for (const auto& w : warnings) {
      std::fprintf(stderr, "warning: %s: %s\n", task.source.generic_string().c_str(), w.c_str());
    }
    return pipeline::apply(tokens, config);
  };

  pipeline::Frequency train_freq;
  if (config.filtering_enabled()) {
    std::mutex mu;
    std::vector<std::size_t> train_ids;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].split == corpus::Split::Train) train_ids.push_back(i);
    }
    parallel_for(train_ids.size(), ctx.jobs, [&](std::size_t idx) {
      const auto words = run_one(tasks[train_ids[idx]]);
      if (!words) return;
      pipeline::Frequency local;
      pipeline::count_words(*words, local);
      std::lock_guard<std::mutex> lock(mu);
      for (const auto& [word, count] : local) train_freq[word] += count;
    });
  }

  std::mutex mu;
  std::vector<std::pair<std::string, std::string>> filtered;
  parallel_for(tasks.size(), ctx.jobs, [&](std::size_t i) {
    const FileTask& task = tasks[i];
    auto words = run_one(task);
    if (!words) {
      std::lock_guard<std::mutex> lock(mu);
      filtered.emplace_back(task.project, task.rel.generic_string());
      return;
    }
    if (config.filtering_enabled()) {
      *words = pipeline::filter_infrequent(std::move(*words), train_freq,
                                           config.min_frequency_default, config.min_frequency);
    }
    const fs::path dest = corpus_path(ctx, "corpus") / std::string(to_string(task.split)) /
                          task.project / (task.rel.generic_string() + ".tok");
    write_file(dest, render_corpus_file(*words));
  });

  std::sort(filtered.begin(), filtered.end());
  std::string filtered_out;
  for (const auto& [project, rel] : filtered) {
    filtered_out += project + "\t" + rel + "\n";
  }
  write_file(filtered_path(ctx), filtered_out);
  log_stage("preprocess", tasks.size(), watch.seconds());
  return 0;
}

std::vector<fs::path> list_tok_files(const fs::path& dir, const std::string& hint) {
  if (!fs::is_directory(dir)) {
    throw IoError("missing tokenized corpus at " + dir.string() + "; run `codevocab " + hint +
                  "` first");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tok") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  return files;
}

int cmd_bpe_train(const Options& opts, std::uint64_t merges_override) {
  const Context ctx = make_context(opts);
  const auto files = list_tok_files(corpus_path(ctx, "corpus") / "train", "preprocess");
  bpe::WordFrequency freq;
  for (const auto& file : files) {
    const auto words = parse_corpus_file(read_file(file), file.generic_string());
    bpe::count_for_training(words, freq);
  }
  const std::uint64_t n = merges_override > 0 ? merges_override : ctx.manifest.bpe_merges;
  Stopwatch watch;
  const auto model = bpe::train(freq, n);
  std::fprintf(stderr, "[bpe-train] %zu merges over %zu distinct words in %.2fs\n",
               model.merges.size(), freq.size(), watch.seconds());
  write_file(merges_path(ctx), bpe::render_merges(model));
  write_file(bpe_vocab_path(ctx), bpe::render_vocab(bpe::vocab_of(model, freq)));
  return 0;
}

int cmd_bpe_apply(const Options& opts) {
  const Context ctx = make_context(opts);
  if (!fs::exists(merges_path(ctx))) {
    throw IoError("missing merges file at " + merges_path(ctx).string() +
                  "; run `codevocab bpe-train` first");
  }
  const auto model = bpe::parse_merges(read_file(merges_path(ctx)));
  const fs::path src_root = corpus_path(ctx, "corpus");
  const fs::path dst_root = corpus_path(ctx, "corpus_bpe");
  const auto files = list_tok_files(src_root, "preprocess");
  Stopwatch watch;
  parallel_for(files.size(), ctx.jobs, [&](std::size_t i) {
    const auto words = parse_corpus_file(read_file(files[i]), files[i].generic_string());
    std::map<std::string, std::vector<std::string>> memo;  // words repeat a lot
    std::vector<CorpusWord> encoded;
    encoded.reserve(words.size() * 2);
    for (const auto& w : words) {
      if (w.is_marker) {
        encoded.push_back(w);
        continue;
      }
      auto it = memo.find(w.text);
      if (it == memo.end()) {
        it = memo.emplace(w.text, bpe::encode(w.text, model).pieces).first;
      }
      for (const auto& piece : it->second) {
        if (piece == model.end_marker) {
          encoded.push_back(marker_word(markers::kBpeEnd, w.kind));
        } else {
          encoded.push_back(source_word(piece, w.kind));
        }
      }
    }
    const fs::path dest = dst_root / fs::relative(files[i], src_root);
    write_file(dest, render_corpus_file(encoded));
  });
  log_stage("bpe-apply", files.size(), watch.seconds());
  return 0;
}

int cmd_stats(const Options& opts, const std::string& corpus_name, std::string label,
              std::uint64_t target_vocab, bool exclude_markers) {
  const Context ctx = make_context(opts);
  const auto files = list_tok_files(corpus_path(ctx, corpus_name), "preprocess");
  Stopwatch watch;
  stats::VocabStats vs;
  for (const auto& file : files) {
    vs.add_corpus_content(read_file(file), file.generic_string());
  }
  if (label.empty()) label = corpus_name;
  const auto report = stats::build_report(label, vs, target_vocab, !exclude_markers);
  write_file(reports_path(ctx) / ("stats_" + label + ".csv"), report.csv());
  write_file(reports_path(ctx) / ("stats_" + label + ".json"), report.to_json().dump(2) + "\n");
  std::cout << stats::StatsReport::kCsvHeader << "\n" << report.csv_row() << "\n";
  log_stage("stats", files.size(), watch.seconds());
  return 0;
}

int cmd_growth(const Options& opts, const std::string& corpus_name,
               const std::string& points_arg) {
  const Context ctx = make_context(opts);
  std::vector<double> points;
  {
    std::string_view rest = points_arg;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      try {
        points.push_back(std::stod(std::string(rest.substr(0, comma))));
      } catch (...) {
        throw ConfigError("invalid growth sample point list: " + points_arg);
      }
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  const fs::path root = corpus_path(ctx, corpus_name);
  const auto files = list_tok_files(root, "preprocess");
  std::map<std::string, std::set<std::string>> by_project;
  for (const auto& file : files) {
    const fs::path rel = fs::relative(file, root);
    auto it = rel.begin();
    if (it == rel.end() || std::next(it) == rel.end()) continue;
    const std::string project = std::next(it)->generic_string();
    auto& vocab = by_project[project];
    for (const auto& w : parse_corpus_file(read_file(file), file.generic_string())) {
      vocab.insert(escape_word(w));
    }
  }
  std::vector<std::pair<std::string, std::set<std::string>>> projects(by_project.begin(),
                                                                      by_project.end());
  const auto curve = stats::growth_curve(projects, points, ctx.seed);
  write_file(reports_path(ctx) / "growth.csv", stats::render_growth_csv(curve));
  std::cout << stats::render_growth_csv(curve);
  return 0;
}

int cmd_compare(const Options& opts, const std::string& baseline, const std::string& variant) {
  const Context ctx = make_context(opts);
  auto load_report = [&](const std::string& name) {
    const fs::path path = reports_path(ctx) / ("stats_" + name + ".json");
    if (!fs::exists(path)) {
      throw IoError("missing stats report at " + path.string() + "; run `codevocab stats` first");
    }
    return stats::StatsReport::from_json(nlohmann::json::parse(read_file(path)));
  };
  const auto base = load_report(baseline);
  auto row = load_report(variant);
  if (base.tokens == 0) throw ConfigError("baseline has zero tokens");
  row.vocab_ratio = base.vocab == 0 ? 0.0
                                    : static_cast<double>(row.vocab) /
                                          static_cast<double>(base.vocab);
  row.tokens_ratio = static_cast<double>(row.tokens) / static_cast<double>(base.tokens);
  write_file(reports_path(ctx) / ("compare_" + variant + "_vs_" + baseline + ".csv"), row.csv());
  std::cout << stats::StatsReport::kCsvHeader << "\n" << row.csv_row() << "\n";
  return 0;
}

std::vector<std::vector<std::string>> load_corpus_units(const Context& ctx,
                                                        const std::string& corpus_name,
                                                        const std::string& split) {
  const auto files = list_tok_files(corpus_path(ctx, corpus_name) / split, "preprocess");
  std::vector<std::vector<std::string>> sequences;
  sequences.reserve(files.size());
  for (const auto& file : files) {
    const std::string content = read_file(file);
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < content.size()) {
      if (content[i] == ' ' || content[i] == '\n') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < content.size() && content[j] != ' ' && content[j] != '\n') ++j;
      words.emplace_back(content.substr(i, j - i));
      i = j;
    }
    sequences.push_back(std::move(words));
  }
  return sequences;
}

int cmd_lm_train(const Options& opts, const std::string& corpus_name, int order, double lambda) {
  const Context ctx = make_context(opts);
  const auto sequences = load_corpus_units(ctx, corpus_name, "train");
  Stopwatch watch;
  const auto model = ngram::Model::fit(sequences, order, lambda, ctx.jobs);
  log_stage("lm-train", sequences.size(), watch.seconds());
  write_file(lm_model_path(ctx), model.save());
  return 0;
}

int cmd_lm_eval(const Options& opts, const std::string& corpus_name, const std::string& split,
                const std::string& scenario, bool cache, double gamma, int cutoff,
                const std::string& unit) {
  const Context ctx = make_context(opts);
  if (!fs::exists(lm_model_path(ctx))) {
    throw IoError("missing language model at " + lm_model_path(ctx).string() +
                  "; run `codevocab lm-train` first");
  }
  const auto model = ngram::Model::load(read_file(lm_model_path(ctx)));
  const auto sequences = load_corpus_units(ctx, corpus_name, split);
  ngram::EvalOptions eopts;
  if (scenario == "static") eopts.scenario = ngram::Scenario::Static;
  else if (scenario == "dynamic") eopts.scenario = ngram::Scenario::Dynamic;
  else throw ConfigError("invalid value for --scenario: " + scenario);
  eopts.use_cache = cache;
  eopts.cache_gamma = gamma;
  eopts.mrr_cutoff = cutoff;
  eopts.unit = unit;
  Stopwatch watch;
  const auto result = model.evaluate(sequences, eopts);
  log_stage("lm-eval", sequences.size(), watch.seconds());
  const nlohmann::json j{{"entropy_bits", result.entropy_bits},
                         {"unit", result.unit},
                         {"mrr", result.mrr},
                         {"n_units", result.n_units}};
  const std::string name = "eval_" + scenario + (cache ? "_cache" : "") + ".json";
  write_file(ctx.out / "lm" / name, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"source-code vocabulary modeling toolkit"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--manifest", opts.manifest_path, "experiment manifest file")->required();
    sub->add_option("--out", opts.out_override, "override the manifest output directory");
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& v) { opts.seed_override = v; },
        "override the manifest seed");
    sub->add_option("--jobs", opts.jobs, "worker threads (default 1)");
  };

  int rc = 0;

  auto* ingest = app.add_subcommand("ingest", "ingest, dedup and split the corpus");
  add_common(ingest);
  ingest->callback([&] { rc = cmd_ingest(opts); });

  auto* preprocess =
      app.add_subcommand("preprocess", "tokenize the corpus under the configured policies");
  add_common(preprocess);
  preprocess->callback([&] { rc = cmd_preprocess(opts); });

  std::uint64_t merges_override = 0;
  auto* bpe_train = app.add_subcommand("bpe-train", "train BPE merges on the training split");
  add_common(bpe_train);
  bpe_train->add_option("--merges", merges_override, "merge count (default: manifest bpe_merges)");
  bpe_train->callback([&] { rc = cmd_bpe_train(opts, merges_override); });

  auto* bpe_apply = app.add_subcommand("bpe-apply", "re-encode the corpus at subword granularity");
  add_common(bpe_apply);
  bpe_apply->callback([&] { rc = cmd_bpe_apply(opts); });

  std::string corpus_name = "corpus";
  std::string label;
  std::uint64_t target_vocab = 100000;
  bool exclude_markers = false;
  auto* stats_cmd = app.add_subcommand("stats", "vocabulary and token statistics");
  add_common(stats_cmd);
  stats_cmd->add_option("--corpus", corpus_name, "corpus directory name (corpus or corpus_bpe)");
  stats_cmd->add_option("--name", label, "report label (default: corpus name)");
  stats_cmd->add_option("--target-vocab", target_vocab, "vocabulary target for the filter");
  stats_cmd->add_flag("--exclude-markers", exclude_markers, "leave markers out of the report");
  stats_cmd->callback(
      [&] { rc = cmd_stats(opts, corpus_name, label, target_vocab, exclude_markers); });

  std::string points = "0.25,0.5,0.75,1.0";
  auto* growth = app.add_subcommand("growth", "vocabulary growth over a seeded project order");
  add_common(growth);
  growth->add_option("--corpus", corpus_name, "corpus directory name");
  growth->add_option("--points", points, "sample fractions in (0,1]");
  growth->callback([&] { rc = cmd_growth(opts, corpus_name, points); });

  std::string baseline, variant;
  auto* compare = app.add_subcommand("compare", "ratios of one stats report against another");
  add_common(compare);
  compare->add_option("--baseline", baseline, "baseline report label")->required();
  compare->add_option("--variant", variant, "variant report label")->required();
  compare->callback([&] { rc = cmd_compare(opts, baseline, variant); });

  int order = 6;
  double lambda = 0.5;
  auto* lm_train = app.add_subcommand("lm-train", "fit the n-gram model on the training split");
  add_common(lm_train);
  lm_train->add_option("--corpus", corpus_name, "corpus directory name");
  lm_train->add_option("--order", order, "n-gram order (default 6)");
  lm_train->add_option("--lambda", lambda, "interpolation weight per order (default 0.5)");
  lm_train->callback([&] { rc = cmd_lm_train(opts, corpus_name, order, lambda); });

  std::string split = "test";
  std::string scenario = "static";
  bool cache = false;
  double gamma = 0.1;
  int cutoff = 10;
  std::string unit = "token";
  auto* lm_eval = app.add_subcommand("lm-eval", "entropy and MRR on a held-out split");
  add_common(lm_eval);
  lm_eval->add_option("--corpus", corpus_name, "corpus directory name");
  lm_eval->add_option("--split", split, "split to evaluate (default test)");
  lm_eval->add_option("--scenario", scenario, "static or dynamic");
  lm_eval->add_flag("--cache", cache, "mix in a file-scoped cache");
  lm_eval->add_option("--gamma", gamma, "cache mixture weight (default 0.1)");
  lm_eval->add_option("--mrr-cutoff", cutoff, "completion rank cutoff (default 10)");
  lm_eval->add_option("--unit", unit, "unit label for the report (token or subtoken)");
  lm_eval->callback(
      [&] { rc = cmd_lm_eval(opts, corpus_name, split, scenario, cache, gamma, cutoff, unit); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
