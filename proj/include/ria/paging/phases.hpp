#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

#include "ria/paging/instance.hpp"

namespace ria::paging {

// One block [begin, end) of the k-phase partition.
//
// Relative to the previous phase (the empty phase 0 for the first one):
//   clean     = pages requested here but not in the previous phase
//   stale     = pages requested here that were requested in the previous phase
//   vanishing = pages requested in the previous phase but not here
// For a marking algorithm "requested in the previous phase" is exactly
// "marked at the end of the previous phase".
struct Phase {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<PageId> pages;  // distinct, sorted
  std::vector<PageId> clean;
  std::vector<PageId> stale;
  std::vector<PageId> vanishing;

  std::size_t length() const noexcept { return end - begin; }
  std::size_t clean_count() const noexcept { return clean.size(); }
  std::size_t stale_count() const noexcept { return stale.size(); }
  std::size_t vanishing_count() const noexcept { return vanishing.size(); }
};

struct PhasePartition {
  std::vector<Phase> phases;

  // Index of the phase containing `round`.
  std::size_t phase_of(std::size_t round) const {
    auto it = std::upper_bound(phases.begin(), phases.end(), round,
                               [](std::size_t r, const Phase& ph) { return r < ph.end; });
    return static_cast<std::size_t>(it - phases.begin());
  }
};

inline PhasePartition k_phase_partition(const PagingInstance& inst) {
  PhasePartition out;
  const auto& seq = inst.sequence;
  std::vector<std::uint8_t> seen(inst.n + 1, 0);
  std::size_t distinct = 0;
  std::size_t begin = 0;

  auto close = [&](std::size_t end) {
    Phase ph;
    ph.begin = begin;
    ph.end = end;
    for (PageId p = 1; p <= inst.n; ++p) {
      if (seen[p]) ph.pages.push_back(p);
    }
    out.phases.push_back(std::move(ph));
  };

  for (std::size_t i = 0; i < seq.size(); ++i) {
    const PageId p = seq[i];
    if (!seen[p]) {
      if (distinct == inst.k) {
        close(i);
        std::fill(seen.begin(), seen.end(), 0);
        distinct = 0;
        begin = i;
      }
      seen[p] = 1;
      ++distinct;
    }
  }
  if (!seq.empty()) close(seq.size());

  const std::vector<PageId> none;
  for (std::size_t i = 0; i < out.phases.size(); ++i) {
    Phase& ph = out.phases[i];
    const auto& prev = i == 0 ? none : out.phases[i - 1].pages;
    std::set_difference(ph.pages.begin(), ph.pages.end(), prev.begin(), prev.end(),
                        std::back_inserter(ph.clean));
    std::set_intersection(ph.pages.begin(), ph.pages.end(), prev.begin(), prev.end(),
                          std::back_inserter(ph.stale));
    std::set_difference(prev.begin(), prev.end(), ph.pages.begin(), ph.pages.end(),
                        std::back_inserter(ph.vanishing));
  }
  return out;
}

}  // namespace ria::paging
