#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/mts/instance.hpp"
#include "ria/paging/instance.hpp"

namespace ria::mts {

struct MtsSchedule {
  std::vector<StateId> states;  // state serving each task
  std::size_t transition_cost = 0;
  Rational processing_cost = 0;

  Rational total() const { return Rational(transition_cost) + processing_cost; }
};

// Cost of a given schedule from `initial`.
inline MtsSchedule evaluate_schedule(const MtsInstance& inst, std::vector<StateId> states,
                                     StateId initial = 0) {
  MtsSchedule s;
  StateId prev = initial;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] != prev) ++s.transition_cost;
    s.processing_cost += inst.tasks[i][states[i]];
    prev = states[i];
  }
  s.states = std::move(states);
  return s;
}

// Exact offline optimum by dynamic programming over (round, state):
//   best[i][s] = min(best[i-1][s], min_s' best[i-1][s'] + 1) + r^i(s)
// starting in `initial` at no cost. O(n |sigma|) time with the uniform metric.
inline MtsSchedule mts_offline_opt(const MtsInstance& inst, StateId initial = 0) {
  const std::size_t n = inst.n;
  const std::size_t len = inst.size();
  std::vector<Rational> best(n);
  for (StateId s = 0; s < n; ++s) best[s] = Rational(s == initial ? 0 : 1);
  StateId best_prev = initial;  // argmin of the previous layer
  // from[i][s]: state occupied in round i - 1 on an optimal path to (i, s).
  std::vector<std::vector<StateId>> from(len, std::vector<StateId>(n));

  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Rational> next(n);
    const Rational jump = i == 0 ? Rational(1) : best[best_prev] + 1;
    for (StateId s = 0; s < n; ++s) {
      if (i == 0) {
        next[s] = best[s] + inst.tasks[i][s];
        from[i][s] = initial;
        continue;
      }
      if (best[s] <= jump) {
        next[s] = best[s];
        from[i][s] = s;
      } else {
        next[s] = jump;
        from[i][s] = best_prev;
      }
      next[s] += inst.tasks[i][s];
    }
    best = std::move(next);
    best_prev = 0;
    for (StateId s = 1; s < n; ++s) {
      if (best[s] < best[best_prev]) best_prev = s;
    }
  }

  std::vector<StateId> states(len);
  if (len > 0) {
    StateId s = best_prev;
    for (std::size_t i = len; i-- > 0;) {
      states[i] = s;
      s = from[i][s];
    }
  }
  return evaluate_schedule(inst, std::move(states), initial);
}

inline double offline_optimum(const MtsInstance& inst) {
  return to_double(mts_offline_opt(inst).total());
}

// Encodes paging on n = k + 1 pages as a uniform MTS: state j means "page
// j + 1 is the one page outside the cache". Requesting page p charges
// W = |sigma| + 1 in state p - 1 and nothing elsewhere, so no optimal
// schedule ever serves a request from the state that misses it. Starting in
// state 0 corresponds to the warm cache {2, ..., n}.
inline MtsInstance paging_to_mts(const paging::PagingInstance& pg) {
  if (pg.n != pg.k + 1) {
    throw InvalidInstance("paging_to_mts needs n = k + 1, got k=" + std::to_string(pg.k) +
                          " n=" + std::to_string(pg.n));
  }
  MtsInstance out;
  out.n = pg.n;
  out.name = pg.name + "-mts";
  const Rational penalty(pg.size() + 1);
  out.tasks.reserve(pg.size());
  for (paging::PageId p : pg.sequence) {
    std::vector<Rational> task(out.n, Rational(0));
    task[p - 1] = penalty;
    out.tasks.push_back(std::move(task));
  }
  return out;
}

// Cache contents matching MTS state `s` under paging_to_mts.
inline std::vector<paging::PageId> cache_for_state(std::size_t pages, StateId s) {
  std::vector<paging::PageId> out;
  for (paging::PageId p = 1; p <= pages; ++p) {
    if (p != s + 1) out.push_back(p);
  }
  return out;
}

}  // namespace ria::mts
