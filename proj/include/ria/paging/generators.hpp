#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "ria/core/random.hpp"
#include "ria/paging/instance.hpp"

namespace ria::paging {

// Lower-bound distribution over k + 1 pages: the first request is uniform, every
// later one is uniform over the k pages other than its predecessor.
inline PagingInstance paging_adversary(std::size_t k, std::size_t length, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("paging adversary: k must be at least 1");
  if (length < 1) throw std::invalid_argument("paging adversary: length must be at least 1");
  PagingInstance inst;
  inst.k = k;
  inst.n = k + 1;
  inst.name = "paging-adversary-k" + std::to_string(k) + "-len" + std::to_string(length) +
              "-seed" + std::to_string(seed);
  inst.sequence.reserve(length);

  Rng rng{seed};
  std::uniform_int_distribution<PageId> first(1, static_cast<PageId>(k + 1));
  std::uniform_int_distribution<PageId> other(1, static_cast<PageId>(k));
  PageId prev = first(rng);
  inst.sequence.push_back(prev);
  for (std::size_t i = 1; i < length; ++i) {
    PageId p = other(rng);
    if (p >= prev) ++p;  // skip the previous page
    inst.sequence.push_back(p);
    prev = p;
  }
  return inst;
}

// Independent uniform requests over n pages.
inline PagingInstance random_paging_instance(std::size_t k, std::size_t n, std::size_t length,
                                             std::uint64_t seed) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("random paging: need k >= 1, n >= k + 1");
  PagingInstance inst;
  inst.k = k;
  inst.n = n;
  inst.name = "paging-random-k" + std::to_string(k) + "-n" + std::to_string(n) + "-len" +
              std::to_string(length) + "-seed" + std::to_string(seed);
  Rng rng{seed};
  std::uniform_int_distribution<PageId> pick(1, static_cast<PageId>(n));
  inst.sequence.reserve(length);
  for (std::size_t i = 0; i < length; ++i) inst.sequence.push_back(pick(rng));
  return inst;
}

// Requests with locality: a working set of k + extra pages drifts slowly over
// n pages, so phases carry a mix of clean and stale pages.
inline PagingInstance drifting_paging_instance(std::size_t k, std::size_t n, std::size_t length,
                                               std::uint64_t seed, std::size_t extra = 2) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("drifting paging: need k >= 1, n >= k + 1");
  PagingInstance inst;
  inst.k = k;
  inst.n = n;
  inst.name = "paging-drift-k" + std::to_string(k) + "-n" + std::to_string(n) + "-len" +
              std::to_string(length) + "-seed" + std::to_string(seed);
  Rng rng{seed};
  const std::size_t window = std::min(n, k + extra);
  std::uniform_int_distribution<std::size_t> offset(0, window - 1);
  std::size_t base = 0;
  inst.sequence.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (uniform01(rng) < 0.05) base = (base + 1) % n;
    inst.sequence.push_back(static_cast<PageId>((base + offset(rng)) % n + 1));
  }
  return inst;
}

}  // namespace ria::paging
