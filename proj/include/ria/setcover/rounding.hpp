#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "ria/core/random.hpp"
#include "ria/setcover/instance.hpp"

namespace ria::setcover {

// A round's selection: the chosen sets in increasing index order.
using Selection = std::vector<SetId>;

// min{1, delta * c * ln n} with delta = x_beg + 1/|F(e)|.
inline double selection_probability(double x_beg, std::size_t covering_size, std::size_t n,
                                    double c) {
  const double delta = x_beg + 1.0 / static_cast<double>(covering_size);
  return std::min(1.0, delta * c * std::log(static_cast<double>(n)));
}

// Product distribution over subsets of F(e): set i is in with probability
// probs[i], independently. With every probability in {0, 1} it is forced.
class IndependentSelection {
 public:
  using value_type = Selection;

  IndependentSelection() = default;
  IndependentSelection(std::vector<SetId> sets, std::vector<double> probs)
      : sets_(std::move(sets)), probs_(std::move(probs)) {}

  static IndependentSelection none() { return {}; }

  bool empty() const noexcept { return false; }
  bool is_forced() const noexcept {
    return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p <= 0.0 || p >= 1.0; });
  }
  bool active() const noexcept { return !sets_.empty(); }
  const std::vector<SetId>& sets() const noexcept { return sets_; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }

  std::optional<double> probability_of(SetId s) const {
    const auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || *it != s) return std::nullopt;
    return probs_[static_cast<std::size_t>(it - sets_.begin())];
  }

  // Sorted, duplicate free and inside F(e).
  bool contains(const Selection& sel) const {
    if (!std::is_sorted(sel.begin(), sel.end())) return false;
    if (std::adjacent_find(sel.begin(), sel.end()) != sel.end()) return false;
    return std::includes(sets_.begin(), sets_.end(), sel.begin(), sel.end());
  }

  Selection sample(Rng& rng) const {
    Selection out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const double p = probs_[i];
      if (p >= 1.0 || (p > 0.0 && bernoulli(rng, p))) out.push_back(sets_[i]);
    }
    return out;
  }

 private:
  std::vector<SetId> sets_;
  std::vector<double> probs_;
};

// Per-set history of the probabilities with which the rounding offered the
// set, one entry per rounding round that involved it.
class SelectionLog {
 public:
  struct Entry {
    std::size_t round;
    double probability;
  };

  explicit SelectionLog(std::size_t sets = 0) : entries_(sets) {}

  void record(std::size_t round, const IndependentSelection& dom) {
    for (std::size_t i = 0; i < dom.sets().size(); ++i) {
      entries_[dom.sets()[i]].push_back({round, dom.probabilities()[i]});
    }
  }

  const std::vector<Entry>& history(SetId s) const { return entries_[s]; }
  std::size_t sets() const noexcept { return entries_.size(); }

 private:
  std::vector<std::vector<Entry>> entries_;
};

// Per-round selection probability once advice is infused with probability
// alpha: sets of the advised optimal cover are bought surely when infused,
// the rest keep their own probability.
inline double mixed_probability(double p, double alpha, bool in_optimal_cover) {
  return (1.0 - alpha) * p + alpha * (in_optimal_cover ? 1.0 : p);
}

// Probability that S has been picked by the rounding so far:
// 1 - prod_j (1 - p_{S,j}). Exact when the rounding rounds and their
// probabilities do not depend on earlier coins.
inline double marginal_inclusion(const SelectionLog& log, SetId s, double alpha = 0.0,
                                 bool in_optimal_cover = false) {
  double miss = 1.0;
  for (const auto& e : log.history(s)) {
    miss *= 1.0 - mixed_probability(e.probability, alpha, in_optimal_cover);
  }
  return 1.0 - miss;
}

// Smallest-index set covering e if e is still uncovered by `selected`.
inline std::optional<SetId> las_vegas_patch(Element e, const std::vector<char>& selected,
                                            const SetSystem& sys) {
  const auto& fe = sys.covering(e);
  for (SetId s : fe) {
    if (selected[s]) return std::nullopt;
  }
  return fe.front();
}

}  // namespace ria::setcover
