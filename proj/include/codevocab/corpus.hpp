// SPDX-License-Identifier: Apache-2.0
//
// Corpus management: ingest a directory tree (one project per top-level
// directory), drop exact duplicates by content digest, and assign projects
// to deterministic train/validation/test splits.
#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "codevocab/io.hpp"
#include "codevocab/shuffle.hpp"

namespace codevocab::corpus {

enum class Split { Train, Validation, Test };

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "unknown";
}

struct Project {
  std::string id;
  std::vector<std::filesystem::path> files;  // sorted by generic path string
  Split split = Split::Train;
};

struct ProjectSet {
  std::vector<Project> projects;  // sorted by id

  std::size_t file_count() const {
    std::size_t n = 0;
    for (const auto& p : projects) n += p.files.size();
    return n;
  }
};

struct DedupIndex {
  std::map<std::string, std::filesystem::path> canonical;  // digest -> kept path
  std::uint64_t duplicate_count = 0;
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

// Every immediate subdirectory of `root` is one project; files anywhere
// below it that match one of the extensions belong to that project.
// An unreadable root is fatal; an unreadable file or subtree is recorded
// as a warning and skipped.
inline ProjectSet ingest(const std::filesystem::path& root,
                         const std::vector<std::string>& extensions = {".java"},
                         std::vector<std::string>* warnings = nullptr) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("corpus root is not a readable directory: " + root.string());
  }
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  auto matches = [&](const fs::path& p) {
    const std::string ext = p.extension().string();
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
  };

  ProjectSet ps;
  std::vector<fs::path> project_dirs;
  for (fs::directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
    if (ec) {
      warn("cannot list " + root.string() + ": " + ec.message());
      break;
    }
    if (it->is_directory()) project_dirs.push_back(it->path());
  }
  std::sort(project_dirs.begin(), project_dirs.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().generic_string() < b.filename().generic_string();
            });

  for (const fs::path& dir : project_dirs) {
    Project project;
    project.id = dir.filename().generic_string();
    fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
      warn("cannot open project " + project.id + ": " + ec.message());
      ps.projects.push_back(std::move(project));
      continue;
    }
    for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
      if (ec) {
        warn("error while scanning " + project.id + ": " + ec.message());
        break;
      }
      if (!it->is_regular_file() || !matches(it->path())) continue;
      std::ifstream probe(it->path());
      if (!probe) {
        warn("unreadable file skipped: " + it->path().generic_string());
        continue;
      }
      project.files.push_back(it->path());
    }
    std::sort(project.files.begin(), project.files.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.generic_string() < b.generic_string();
              });
    ps.projects.push_back(std::move(project));
  }
  return ps;
}

// Exact-content dedup: the digest is SHA-256 of the newline-normalized file
// content and the lexicographically smallest path of each clone group is
// retained. Hashing may run on several threads; the merge is a commutative
// min-by-path map union, so the result does not depend on scheduling.
inline std::pair<ProjectSet, DedupIndex> dedup(const ProjectSet& ps, unsigned jobs = 1) {
  namespace fs = std::filesystem;
  std::vector<fs::path> all_files;
  for (const auto& project : ps.projects) {
    all_files.insert(all_files.end(), project.files.begin(), project.files.end());
  }

  std::map<std::string, std::string> canonical;  // digest -> generic path string
  std::mutex mu;
  auto hash_range = [&](std::size_t begin, std::size_t end) {
    std::map<std::string, std::string> local;
    for (std::size_t i = begin; i < end; ++i) {
      const std::string digest = sha256_hex(normalize_newlines(read_file(all_files[i])));
      const std::string path = all_files[i].generic_string();
      auto [it, inserted] = local.try_emplace(digest, path);
      if (!inserted && path < it->second) it->second = path;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [digest, path] : local) {
      auto [it, inserted] = canonical.try_emplace(digest, path);
      if (!inserted && path < it->second) it->second = path;
    }
  };

  if (jobs <= 1 || all_files.size() < 2) {
    hash_range(0, all_files.size());
  } else {
    const std::size_t n_threads = std::min<std::size_t>(jobs, all_files.size());
    std::vector<std::thread> threads;
    const std::size_t chunk = (all_files.size() + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(begin + chunk, all_files.size());
      if (begin < end) threads.emplace_back(hash_range, begin, end);
    }
    for (auto& th : threads) th.join();
  }

  std::set<std::string> retained;
  DedupIndex index;
  for (const auto& [digest, path] : canonical) {
    retained.insert(path);
    index.canonical[digest] = fs::path(path);
  }
  index.duplicate_count = all_files.size() - canonical.size();

  ProjectSet deduped;
  for (const auto& project : ps.projects) {
    Project kept;
    kept.id = project.id;
    kept.split = project.split;
    for (const auto& file : project.files) {
      if (retained.contains(file.generic_string())) kept.files.push_back(file);
    }
    deduped.projects.push_back(std::move(kept));
  }
  return {std::move(deduped), std::move(index)};
}

// Shuffles projects with a seeded permutation and partitions them by ratio.
// Same seed and same project list give identical assignments.
inline ProjectSet split(ProjectSet ps, double train_ratio, double validation_ratio,
                        double test_ratio, std::uint64_t seed) {
  if (train_ratio <= 0 || validation_ratio <= 0 || test_ratio <= 0) {
    throw ConfigError("split ratios must be positive");
  }
  if (std::abs(train_ratio + validation_ratio + test_ratio - 1.0) > 1e-9) {
    throw ConfigError("split ratios must sum to 1");
  }
  if (ps.projects.size() < 3) {
    throw ConfigError("need at least 3 projects to split, have " +
                      std::to_string(ps.projects.size()));
  }
  std::vector<std::string> ids;
  ids.reserve(ps.projects.size());
  for (const auto& p : ps.projects) ids.push_back(p.id);
  const std::vector<std::size_t> order = seeded_permutation(ids, seed);

  const auto n = static_cast<double>(ps.projects.size());
  auto n_train = static_cast<std::size_t>(std::llround(n * train_ratio));
  n_train = std::min(n_train, ps.projects.size());
  auto n_valid = static_cast<std::size_t>(std::llround(n * validation_ratio));
  n_valid = std::min(n_valid, ps.projects.size() - n_train);

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Split s = pos < n_train                ? Split::Train
              : pos < n_train + n_valid    ? Split::Validation
                                           : Split::Test;
    ps.projects[order[pos]].split = s;
  }
  return ps;
}

// One line per project: `<split>\t<project-id>`, sorted by project id.
inline std::string render_split_manifest(const ProjectSet& ps) {
  std::string out;
  for (const auto& p : ps.projects) {
    out += to_string(p.split);
    out += '\t';
    out += p.id;
    out += '\n';
  }
  return out;
}

}  // namespace codevocab::corpus
