#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ria/core/experiment.hpp"
#include "ria/harness/csv.hpp"
#include "ria/harness/io.hpp"
#include "ria/mts.hpp"
#include "ria/paging.hpp"
#include "ria/setcover.hpp"

namespace ria::harness {

struct GeneratorSpec {
  std::string kind;  // paging-adversary | paging-random | mts-from-paging | mts-random | sc-tree | sc-random
  std::size_t k = 4;
  std::size_t n = 0;  // 0: derived from k where that makes sense
  std::size_t m = 10;
  std::size_t depth = 3;
  std::size_t phases = 1;
  std::size_t length = 1000;
  double density = 0.2;
  std::string mass = "unadvised";  // sc-tree: unadvised | mixed
  double alpha = 0.0;              // sc-tree mixed mode
  std::uint64_t seed = 1;
};

inline const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds{"paging-adversary", "paging-random",
                                              "mts-from-paging",  "mts-random",
                                              "sc-tree",          "sc-random"};
  return kinds;
}

inline Instance generate(const GeneratorSpec& g) {
  if (g.kind == "paging-adversary") return paging::paging_adversary(g.k, g.length, g.seed);
  if (g.kind == "paging-random") {
    return paging::random_paging_instance(g.k, g.n ? g.n : 2 * g.k, g.length, g.seed);
  }
  if (g.kind == "mts-from-paging") {
    return mts::paging_to_mts(paging::paging_adversary(g.k, g.length, g.seed));
  }
  if (g.kind == "mts-random") return mts::random_mts_instance(g.n ? g.n : 4, g.length, g.seed);
  if (g.kind == "sc-tree") {
    if (g.mass != "unadvised" && g.mass != "mixed") {
      throw std::invalid_argument("sc-tree: --mass must be unadvised or mixed");
    }
    setcover::TreeAdversaryOptions opts;
    opts.mode = g.mass == "mixed" ? setcover::MassMode::kMixed : setcover::MassMode::kUnadvised;
    opts.alpha = g.alpha;
    return setcover::phased_tree_adversary(g.depth, g.phases, opts);
  }
  if (g.kind == "sc-random") {
    return setcover::random_set_cover_instance(g.n ? g.n : 16, g.m, g.length, g.seed, g.density);
  }
  throw std::invalid_argument("unknown generator '" + g.kind + "'");
}

struct ExperimentPlan {
  std::vector<double> alphas;
  std::size_t trials = 100;
  std::uint64_t master_seed = 1;
  std::size_t node_budget = setcover::kDefaultNodeBudget;

  void validate() const {
    if (alphas.empty()) throw std::invalid_argument("plan needs at least one alpha");
    for (double a : alphas) {
      if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("alpha outside [0, 1]");
    }
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  }
};

namespace detail {

inline ResultRow blank_row(const Instance& inst, double alpha, const ExperimentPlan& plan,
                           RowStatus status, std::string message) {
  ResultRow row;
  row.result.problem = instance_problem(inst);
  row.result.instance = instance_name(inst);
  row.result.alpha = alpha;
  row.result.trials = plan.trials;
  row.result.master_seed = plan.master_seed;
  row.status = status;
  row.message = std::move(message);
  return row;
}

template <class Alg, class Oracle, class Inst>
std::vector<ResultRow> sweep(const Alg& alg, const Oracle& oracle, const Inst& inst, double opt,
                             const ExperimentPlan& plan) {
  std::vector<ResultRow> rows;
  for (double a : plan.alphas) {
    ResultRow row;
    row.result = estimate_ratio_given_opt(alg, oracle, inst, InfusionParameter(a), plan.trials,
                                          plan.master_seed, opt);
    row.status = opt > 0.0 ? RowStatus::kOk : RowStatus::kOptZero;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

// One row per alpha, in plan order. Every alpha reuses the master seed, so a
// row is reproducible from (instance, alpha, seed) alone. Solver failures are
// reported in the status column instead of aborting the plan.
inline std::vector<ResultRow> run_plan(const Instance& instance, const ExperimentPlan& plan) {
  plan.validate();
  auto failed = [&](RowStatus status, const std::string& message) {
    std::vector<ResultRow> rows;
    for (double a : plan.alphas) rows.push_back(detail::blank_row(instance, a, plan, status, message));
    return rows;
  };
  try {
    return std::visit(
        [&](const auto& inst) -> std::vector<ResultRow> {
          using T = std::decay_t<decltype(inst)>;
          if constexpr (std::is_same_v<T, paging::PagingInstance>) {
            const double opt = static_cast<double>(paging::belady_opt(inst).faults);
            return detail::sweep(paging::RandomMark(inst), paging::UlfdOracle(inst), inst, opt, plan);
          } else if constexpr (std::is_same_v<T, mts::MtsInstance>) {
            const double opt = mts::offline_optimum(inst);
            return detail::sweep(mts::UnifMts(inst), mts::LtsOracle{}, inst, opt, plan);
          } else {
            const auto cover = setcover::exact_opt(inst, plan.node_budget);
            const setcover::BoostOracle oracle(inst.sets(), cover.sets);
            return detail::sweep(setcover::RandSc(inst), oracle, inst,
                                 static_cast<double>(cover.size), plan);
          }
        },
        instance);
  } catch (const BudgetExceeded& e) {
    return failed(RowStatus::kBudgetExceeded, e.what());
  } catch (const std::exception& e) {
    return failed(RowStatus::kError, e.what());
  }
}

}  // namespace ria::harness
