#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/core/infusion.hpp"
#include "ria/paging/instance.hpp"

namespace ria::paging {

// Pages RandomMark may evict on a fault with a full cache: the unmarked
// resident pages, or every resident page when all are marked (they get
// unmarked first). Sorted ascending.
inline std::vector<PageId> eviction_candidates(const CacheState& cache) {
  return cache.all_marked() ? cache.sorted_pages() : cache.unmarked();
}

struct StepOutcome {
  CacheState state;
  int cost = 0;
  PageId evicted = kNoPage;
};

// Applies one RandomMark round in place. `evict` is only read on a fault with
// a full cache and must then be one of eviction_candidates(cache).
inline int apply_random_mark(CacheState& cache, PageId request, PageId evict,
                             PageId* evicted_out = nullptr) {
  if (evicted_out) *evicted_out = kNoPage;
  if (cache.resident(request)) {
    cache.mark(request);
    return 0;
  }
  if (cache.full()) {
    const bool reset = cache.all_marked();
    if (!cache.resident(evict) || (!reset && cache.marked(evict))) {
      throw ContractViolation("RandomMark: page " + std::to_string(evict) +
                              " is not an unmarked resident page");
    }
    if (reset) cache.unmark_all();
    cache.evict(evict);
    if (evicted_out) *evicted_out = evict;
  }
  cache.insert(request);
  cache.mark(request);
  return 1;
}

inline StepOutcome random_mark_step(CacheState state, PageId request, PageId evict) {
  StepOutcome out{std::move(state), 0, kNoPage};
  out.cost = apply_random_mark(out.state, request, evict, &out.evicted);
  return out;
}

// The marking algorithm of Fiat et al.: evict uniformly among unmarked pages.
// The uniform draw is the round's buffer; an infused buffer names the page.
class RandomMark {
 public:
  using Request = PageId;
  using Decision = PageId;
  using Domain = UniformChoice<PageId>;

  struct Answer {
    bool fault = false;
    PageId evicted = kNoPage;
    bool operator==(const Answer&) const = default;
  };

  RandomMark(std::size_t k, std::size_t n) : cache_(k, n) {}
  explicit RandomMark(const PagingInstance& inst) : cache_(inst.k, inst.n) {}

  Domain domain(PageId request) const {
    if (cache_.resident(request) || !cache_.full()) return Domain::forced(kNoPage);
    return Domain(eviction_candidates(cache_));
  }

  Answer decide(PageId request, const Domain&, PageId buffer) const {
    if (cache_.resident(request)) return {false, kNoPage};
    if (!cache_.full()) return {true, kNoPage};
    const bool reset = cache_.all_marked();
    if (!cache_.resident(buffer) || (!reset && cache_.marked(buffer))) {
      throw ContractViolation("RandomMark: buffer page " + std::to_string(buffer) +
                              " is not an unmarked resident page");
    }
    return {true, buffer};
  }

  double commit(PageId request, const Domain&, const Answer& answer) {
    return apply_random_mark(cache_, request, answer.evicted);
  }

  const CacheState& cache() const noexcept { return cache_; }

 private:
  CacheState cache_;
};

// Longest forward distance among the pages RandomMark may evict. Returns
// kNoPage when the round is not a fault with a full cache.
inline PageId ulfd_advice(const PagingInstance& inst, std::size_t round, const CacheState& cache,
                          const NextUseIndex& index) {
  const PageId request = inst.request(round);
  if (cache.resident(request) || !cache.full()) return kNoPage;
  return longest_forward_distance(index, eviction_candidates(cache), round);
}

inline PageId ulfd_advice(const PagingInstance& inst, std::size_t round, const CacheState& cache) {
  return ulfd_advice(inst, round, cache, NextUseIndex(inst));
}

class UlfdOracle {
 public:
  explicit UlfdOracle(const PagingInstance& inst)
      : index_(std::make_shared<const NextUseIndex>(inst)) {}

  PageId advise(const PagingInstance&, std::size_t round, const RandomMark&,
                const RandomMark::Domain& domain, Rng&) const {
    if (domain.is_forced()) return domain.candidates().front();
    return longest_forward_distance(*index_, domain.candidates(), round);
  }

 private:
  std::shared_ptr<const NextUseIndex> index_;
};

}  // namespace ria::paging
