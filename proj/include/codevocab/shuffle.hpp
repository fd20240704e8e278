// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace codevocab {

// Deterministic permutation of indexes 0..keys.size()-1: each key draws a
// pseudo-random value from a seeded mt19937_64 (in sorted-key order), then a
// stable sort on (value, key) breaks ties. Same seed + same key set gives
// the same order on every platform.
inline std::vector<std::size_t> seeded_permutation(const std::vector<std::string>& keys,
                                                   std::uint64_t seed) {
  std::vector<std::size_t> by_key(keys.size());
  std::iota(by_key.begin(), by_key.end(), std::size_t{0});
  std::stable_sort(by_key.begin(), by_key.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> draw(keys.size());
  for (std::size_t idx : by_key) draw[idx] = rng();
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (draw[a] != draw[b]) return draw[a] < draw[b];
    return keys[a] < keys[b];
  });
  return order;
}

}  // namespace codevocab
