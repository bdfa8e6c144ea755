#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ria/paging/instance.hpp"

namespace ria::paging {

struct Eviction {
  std::size_t round = 0;
  PageId page = kNoPage;
};

struct BeladyResult {
  std::size_t faults = 0;
  std::vector<std::size_t> fault_rounds;
  std::vector<Eviction> schedule;
};

// Offline optimum by longest forward distance (Belady). Starts from
// `initial_cache` (empty by default); ties go to the smallest page id.
inline BeladyResult belady_opt(const PagingInstance& inst,
                               std::span<const PageId> initial_cache = {}) {
  const NextUseIndex index(inst);
  std::vector<std::uint8_t> resident(inst.n + 1, 0);
  std::vector<PageId> cache;
  cache.reserve(inst.k);
  for (PageId p : initial_cache) {
    if (!resident[p] && cache.size() < inst.k) {
      resident[p] = 1;
      cache.push_back(p);
    }
  }

  BeladyResult r;
  for (std::size_t i = 0; i < inst.sequence.size(); ++i) {
    const PageId p = inst.sequence[i];
    if (resident[p]) continue;
    ++r.faults;
    r.fault_rounds.push_back(i);
    if (cache.size() == inst.k) {
      std::size_t victim = 0;
      std::size_t victim_next = 0;
      for (std::size_t j = 0; j < cache.size(); ++j) {
        const std::size_t next = index.next_after(cache[j], i);
        if (j == 0 || next > victim_next || (next == victim_next && cache[j] < cache[victim])) {
          victim = j;
          victim_next = next;
        }
      }
      r.schedule.push_back({i, cache[victim]});
      resident[cache[victim]] = 0;
      cache[victim] = p;
    } else {
      cache.push_back(p);
    }
    resident[p] = 1;
  }
  return r;
}

inline std::size_t offline_optimum(const PagingInstance& inst) { return belady_opt(inst).faults; }

}  // namespace ria::paging
