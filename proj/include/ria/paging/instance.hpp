#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ria/core/errors.hpp"

namespace ria::paging {

// Pages are numbered 1..n; 0 means "no page".
using PageId = std::uint32_t;
inline constexpr PageId kNoPage = 0;

struct PagingInstance {
  std::size_t k = 1;  // cache size
  std::size_t n = 2;  // number of pages
  std::vector<PageId> sequence;
  std::string name = "paging";

  std::size_t size() const noexcept { return sequence.size(); }
  PageId request(std::size_t i) const { return sequence[i]; }

  void validate() const {
    if (k < 1) throw InvalidInstance("paging: cache size k must be at least 1");
    if (n < k + 1) throw InvalidInstance("paging: need n >= k + 1 pages");
    for (PageId p : sequence) {
      if (p < 1 || p > n) {
        throw InvalidInstance("paging: request " + std::to_string(p) + " outside [1, n]");
      }
    }
  }
};

inline const char* problem_name(const PagingInstance&) { return "paging"; }

// Cache contents with one mark bit per resident page.
class CacheState {
 public:
  CacheState(std::size_t k, std::size_t n) : k_(k), resident_(n + 1, 0), marked_(n + 1, 0) {
    pages_.reserve(k);
  }

  std::size_t capacity() const noexcept { return k_; }
  std::size_t size() const noexcept { return pages_.size(); }
  bool full() const noexcept { return pages_.size() == k_; }
  bool resident(PageId p) const noexcept { return p < resident_.size() && resident_[p]; }
  bool marked(PageId p) const noexcept { return p < marked_.size() && marked_[p]; }
  bool all_marked() const noexcept { return marked_count_ == pages_.size(); }
  std::size_t marked_count() const noexcept { return marked_count_; }

  // Resident pages, in no particular order.
  const std::vector<PageId>& pages() const noexcept { return pages_; }

  std::vector<PageId> unmarked() const {
    std::vector<PageId> out;
    for (PageId p : pages_) {
      if (!marked_[p]) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<PageId> sorted_pages() const {
    std::vector<PageId> out = pages_;
    std::sort(out.begin(), out.end());
    return out;
  }

  void mark(PageId p) {
    if (!marked_[p]) {
      marked_[p] = 1;
      ++marked_count_;
    }
  }

  void unmark_all() {
    for (PageId p : pages_) marked_[p] = 0;
    marked_count_ = 0;
  }

  void insert(PageId p) {
    if (resident_[p]) return;
    if (full()) throw ContractViolation("insert into a full cache");
    resident_[p] = 1;
    pages_.push_back(p);
  }

  void evict(PageId p) {
    if (!resident_[p]) throw ContractViolation("evicting a page that is not resident");
    if (marked_[p]) {
      marked_[p] = 0;
      --marked_count_;
    }
    resident_[p] = 0;
    pages_.erase(std::find(pages_.begin(), pages_.end(), p));
  }

  bool operator==(const CacheState& o) const {
    return k_ == o.k_ && resident_ == o.resident_ && marked_ == o.marked_;
  }

 private:
  std::size_t k_;
  std::vector<PageId> pages_;
  std::vector<std::uint8_t> resident_;
  std::vector<std::uint8_t> marked_;
  std::size_t marked_count_ = 0;
};

// Per-page sorted request positions; answers "when is p requested next".
class NextUseIndex {
 public:
  static constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

  explicit NextUseIndex(const PagingInstance& inst) : positions_(inst.n + 1) {
    for (std::size_t i = 0; i < inst.sequence.size(); ++i) {
      positions_[inst.sequence[i]].push_back(i);
    }
  }

  // First position strictly after `round` at which p is requested, or kNever.
  std::size_t next_after(PageId p, std::size_t round) const {
    const auto& pos = positions_[p];
    auto it = std::upper_bound(pos.begin(), pos.end(), round);
    return it == pos.end() ? kNever : *it;
  }

 private:
  std::vector<std::vector<std::size_t>> positions_;
};

// Page with the latest next request after `round`; never-again beats any
// finite distance and ties go to the smallest id. `candidates` must be sorted.
inline PageId longest_forward_distance(const NextUseIndex& index,
                                       const std::vector<PageId>& candidates, std::size_t round) {
  PageId best = kNoPage;
  std::size_t best_next = 0;
  for (PageId p : candidates) {
    const std::size_t next = index.next_after(p, round);
    if (best == kNoPage || next > best_next) {
      best = p;
      best_next = next;
    }
  }
  return best;
}

}  // namespace ria::paging
