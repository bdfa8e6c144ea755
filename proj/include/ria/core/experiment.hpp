#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ria/core/game.hpp"
#include "ria/core/stats.hpp"

namespace ria {

struct ExperimentResult {
  std::string problem;
  std::string instance;
  double alpha = 0.0;
  std::size_t trials = 0;
  double mean_cost = 0.0;
  double opt_cost = 0.0;
  std::optional<double> ratio;  // unset when opt_cost == 0
  double std_error = 0.0;
  std::uint64_t master_seed = 0;

  bool operator==(const ExperimentResult&) const = default;
};

// Worker count for ensemble runs: RIA_THREADS if set, else the hardware.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("RIA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, count) over a small thread pool. The first
// exception thrown by any call is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t workers = worker_count()) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(Stream::kTrial), trial);
}

// Total cost of each of `trials` independent games. Slot t always holds the
// game seeded by trial_seed(master_seed, t), whatever the scheduling.
template <OnlineAlgorithm Alg, class Oracle, RequestSequence Inst>
  requires AdviceOracle<Oracle, Alg, Inst>
std::vector<double> trial_costs(const Alg& alg, const Oracle& oracle, const Inst& inst,
                                InfusionParameter alpha, std::size_t trials,
                                std::uint64_t master_seed) {
  std::vector<double> costs(trials, 0.0);
  parallel_for(trials, [&](std::size_t t) {
    Alg a = alg;
    Oracle o = oracle;
    costs[t] = play(a, o, inst, alpha, trial_seed(master_seed, t));
  });
  return costs;
}

template <OnlineAlgorithm Alg, class Oracle, RequestSequence Inst>
  requires AdviceOracle<Oracle, Alg, Inst>
ExperimentResult estimate_ratio_given_opt(const Alg& alg, const Oracle& oracle, const Inst& inst,
                                          InfusionParameter alpha, std::size_t trials,
                                          std::uint64_t master_seed, double opt_cost) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const auto costs = trial_costs(alg, oracle, inst, alpha, trials, master_seed);
  const auto summary = stats::summarize(costs);

  ExperimentResult r;
  r.problem = problem_name(inst);
  r.instance = inst.name;
  r.alpha = alpha.value();
  r.trials = trials;
  r.mean_cost = summary.mean;
  r.opt_cost = opt_cost;
  if (opt_cost > 0.0) r.ratio = summary.mean / opt_cost;
  r.std_error = summary.std_error;
  r.master_seed = master_seed;
  return r;
}

// The offline optimum is found through the problem's offline_optimum(inst)
// overload; solver failures propagate.
template <OnlineAlgorithm Alg, class Oracle, RequestSequence Inst>
  requires AdviceOracle<Oracle, Alg, Inst>
ExperimentResult estimate_ratio(const Alg& alg, const Oracle& oracle, const Inst& inst,
                                InfusionParameter alpha, std::size_t trials,
                                std::uint64_t master_seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const double opt = static_cast<double>(offline_optimum(inst));
  return estimate_ratio_given_opt(alg, oracle, inst, alpha, trials, master_seed, opt);
}

}  // namespace ria
