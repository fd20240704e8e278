// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "codevocab/io.hpp"

namespace codevocab {

// One experiment = one manifest: the manifest plus the corpus fully
// determine every output. Relative paths are resolved against the
// manifest's own directory so a checkout can live anywhere.
struct ExperimentManifest {
  std::filesystem::path corpus_root;
  std::filesystem::path pipeline_config;  // empty: built-in defaults
  std::uint64_t bpe_merges = 10000;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  std::vector<std::string> extensions = {".java"};
  double train_ratio = 0.70;
  double validation_ratio = 0.15;
  double test_ratio = 0.15;

  static ExperimentManifest load(const std::filesystem::path& path) {
    ExperimentManifest m;
    const std::filesystem::path base = path.has_parent_path()
                                           ? path.parent_path()
                                           : std::filesystem::path(".");
    auto resolve = [&](const std::string& value) {
      std::filesystem::path p(value);
      return p.is_absolute() ? p : base / p;
    };
    bool saw_root = false, saw_out = false;
    for (const auto& [key, value] : parse_key_values(read_file(path))) {
      if (key == "corpus_root") {
        m.corpus_root = resolve(value);
        saw_root = true;
      } else if (key == "pipeline_config") {
        m.pipeline_config = resolve(value);
      } else if (key == "bpe_merges") {
        try {
          m.bpe_merges = std::stoull(value);
        } catch (...) {
          throw ConfigError("invalid value for bpe_merges: " + value);
        }
      } else if (key == "seed") {
        try {
          m.seed = std::stoull(value);
        } catch (...) {
          throw ConfigError("invalid value for seed: " + value);
        }
      } else if (key == "output_dir") {
        m.output_dir = resolve(value);
        saw_out = true;
      } else if (key == "extensions") {
        m.extensions.clear();
        std::string_view rest = value;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          m.extensions.emplace_back(rest.substr(0, comma));
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
      } else if (key == "split_ratios") {
        double r[3];
        std::string_view rest = value;
        for (int i = 0; i < 3; ++i) {
          const auto comma = rest.find(',');
          if ((i < 2) == (comma == std::string_view::npos)) {
            throw ConfigError("invalid value for split_ratios: " + value);
          }
          try {
            r[i] = std::stod(std::string(rest.substr(0, comma)));
          } catch (...) {
            throw ConfigError("invalid value for split_ratios: " + value);
          }
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        m.train_ratio = r[0];
        m.validation_ratio = r[1];
        m.test_ratio = r[2];
      } else {
        throw ConfigError("unknown configuration key: " + key);
      }
    }
    if (!saw_root) throw ConfigError("manifest is missing corpus_root");
    if (!saw_out) throw ConfigError("manifest is missing output_dir");
    return m;
  }
};

}  // namespace codevocab
