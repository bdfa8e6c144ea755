#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/setcover/instance.hpp"

namespace ria::setcover {

struct OptimalCover {
  std::size_t size = 0;
  std::vector<SetId> sets;  // increasing index order
};

namespace detail {

class CoverSearch {
 public:
  using Mask = std::vector<std::uint64_t>;

  CoverSearch(const SetCoverInstance& inst, const std::vector<Element>& elements,
              std::size_t node_budget)
      : budget_(node_budget), words_((elements.size() + 63) / 64) {
    std::vector<std::size_t> slot(inst.n + 1, elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] < 1 || elements[i] > inst.n) {
        throw InvalidInstance("setcover: element " + std::to_string(elements[i]) + " outside [1, n]");
      }
      slot[elements[i]] = i;
    }
    masks_.assign(inst.family.size(), Mask(words_, 0));
    last_cover_.assign(elements.size(), 0);
    std::vector<char> seen(elements.size(), 0);
    for (SetId s = 0; s < inst.family.size(); ++s) {
      for (Element e : inst.family[s]) {
        const std::size_t i = e <= inst.n ? slot[e] : elements.size();
        if (i == elements.size()) continue;
        masks_[s][i / 64] |= std::uint64_t{1} << (i % 64);
        last_cover_[i] = s;
        seen[i] = 1;
      }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!seen[i]) throw InvalidInstance("setcover: element " + std::to_string(elements[i]) + " is in no set");
    }
    // Largest useful set size among indices >= s.
    suffix_max_.assign(masks_.size() + 1, 0);
    for (std::size_t s = masks_.size(); s-- > 0;) {
      suffix_max_[s] = std::max(suffix_max_[s + 1], popcount(masks_[s]));
    }
    all_ = Mask(words_, 0);
    for (std::size_t i = 0; i < elements.size(); ++i) all_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  // Greedy packing of elements with pairwise disjoint covering families.
  std::size_t lower_bound() const {
    std::vector<char> used_sets(masks_.size(), 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < last_cover_.size(); ++i) {
      bool disjoint = true;
      for (SetId s = 0; s < masks_.size() && disjoint; ++s) {
        if (used_sets[s] && covers(s, i)) disjoint = false;
      }
      if (!disjoint) continue;
      ++count;
      for (SetId s = 0; s < masks_.size(); ++s) {
        if (covers(s, i)) used_sets[s] = 1;
      }
    }
    return count;
  }

  OptimalCover solve() {
    OptimalCover out;
    if (last_cover_.empty()) return out;
    for (std::size_t k = std::max<std::size_t>(1, lower_bound()); k <= masks_.size(); ++k) {
      chosen_.clear();
      if (search(0, k, all_)) {
        out.size = k;
        out.sets = chosen_;
        return out;
      }
    }
    throw InvalidInstance("setcover: arrived elements cannot be covered");
  }

 private:
  static std::size_t popcount(const Mask& m) {
    std::size_t c = 0;
    for (auto w : m) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool covers(SetId s, std::size_t i) const { return (masks_[s][i / 64] >> (i % 64)) & 1; }

  // Include-first search over increasing set indices, so the first cover of
  // size k found is the lexicographically smallest one.
  bool search(SetId from, std::size_t picks, const Mask& uncovered) {
    const std::size_t left = popcount(uncovered);
    if (left == 0) return true;
    if (picks == 0) return false;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("setcover: exact search exceeded " + std::to_string(budget_) + " nodes");
    }
    // Some chosen set must cover the uncovered element whose last covering
    // set comes first.
    SetId limit = masks_.size();
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = uncovered[w]; bits; bits &= bits - 1) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        limit = std::min(limit, last_cover_[i]);
      }
    }
    Mask rest(words_);
    for (SetId s = from; s <= limit && s < masks_.size(); ++s) {
      if (picks * suffix_max_[s] < left) return false;
      bool useful = false;
      for (std::size_t w = 0; w < words_; ++w) {
        rest[w] = uncovered[w] & ~masks_[s][w];
        useful = useful || rest[w] != uncovered[w];
      }
      if (!useful) continue;
      chosen_.push_back(s);
      if (search(s + 1, picks - 1, rest)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t words_;
  std::vector<Mask> masks_;
  std::vector<SetId> last_cover_;
  std::vector<std::size_t> suffix_max_;
  Mask all_;
  std::vector<SetId> chosen_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultNodeBudget = 20'000'000;

// Minimum-cardinality cover of `elements`; among optimal covers the
// lexicographically smallest index list. Throws BudgetExceeded when the
// search needs more than `node_budget` nodes.
inline OptimalCover exact_opt(const SetCoverInstance& inst, std::vector<Element> elements,
                              std::size_t node_budget = kDefaultNodeBudget) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return detail::CoverSearch(inst, elements, node_budget).solve();
}

// Optimal cover of the arrived elements.
inline OptimalCover exact_opt(const SetCoverInstance& inst,
                              std::size_t node_budget = kDefaultNodeBudget) {
  return exact_opt(inst, arrived_elements(inst), node_budget);
}

inline double offline_optimum(const SetCoverInstance& inst) {
  return static_cast<double>(exact_opt(inst).size);
}

}  // namespace ria::setcover
