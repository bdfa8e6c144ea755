#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ria/core/experiment.hpp"
#include "ria/core/stats.hpp"
#include "ria/harness/bounds.hpp"
#include "ria/harness/csv.hpp"
#include "ria/mts.hpp"
#include "ria/paging.hpp"
#include "ria/setcover.hpp"

namespace ria::harness {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance {

inline CriterionOutcome outcome(int id, std::string title) {
  CriterionOutcome c;
  c.id = id;
  c.title = std::move(title);
  return c;
}

inline const std::vector<double>& alpha_grid() {
  static const std::vector<double> grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  return grid;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

inline double paging_cost(const paging::PagingInstance& inst, double alpha, std::uint64_t seed) {
  paging::RandomMark alg(inst);
  paging::UlfdOracle oracle(inst);
  return play(alg, oracle, inst, InfusionParameter(alpha), seed);
}

// 1. Perfect advice is optimal when n = k + 1.
inline CriterionOutcome optimal_at_k_plus_one() {
  auto out = outcome(1, "alpha=1 RandomMark+ULFD equals Belady at n=k+1");
  std::size_t runs = 0, mismatches = 0;
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      for (int kind = 0; kind < 2; ++kind) {
        const auto inst = kind == 0 ? paging::paging_adversary(k, 500, seed)
                                    : paging::random_paging_instance(k, k + 1, 500, seed);
        const double cost = paging_cost(inst, 1.0, seed);
        mismatches += cost != static_cast<double>(paging::belady_opt(inst).faults);
        ++runs;
      }
    }
  }
  out.pass = mismatches == 0;
  out.detail = std::to_string(runs - mismatches) + "/" + std::to_string(runs) + " runs exact";
  return out;
}

// 2. Perfect advice is within 2 OPT + 2k for general n.
inline CriterionOutcome two_approximation() {
  auto out = outcome(2, "alpha=1 cost <= 2 OPT + 2k for n <= 20, k <= 8");
  std::size_t violations = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t k = 2 + seed % 7;
    const std::size_t n = k + 1 + (seed * 7) % (20 - k);
    const auto inst = seed % 2 == 0 ? paging::drifting_paging_instance(k, n, 600, seed)
                                    : paging::random_paging_instance(k, n, 600, seed);
    const double opt = static_cast<double>(paging::belady_opt(inst).faults);
    const double cost = paging_cost(inst, 1.0, seed);
    const double slack = 2.0 * opt + 2.0 * static_cast<double>(k) - cost;
    violations += slack < 0.0;
    worst = seed == 0 ? slack : std::min(worst, slack);
  }
  out.pass = violations == 0;
  out.detail = std::to_string(violations) + " violations in 100 seeds, min slack " + fmt(worst);
  return out;
}

struct SweepPoint {
  double alpha;
  double mean;
  double std_error;
  double opt;
  double bound;
};

// 3. Paging sweep; also feeds criterion 4.
inline CriterionOutcome paging_sweep(std::vector<SweepPoint>& points) {
  auto out = outcome(3, "paging sweep k=6: mean <= min{2H_k, 2/alpha} OPT + 2k + 3 se");
  const std::size_t k = 6;
  const auto inst = paging::paging_adversary(k, 3000, 20240601);
  const double opt = static_cast<double>(paging::belady_opt(inst).faults);
  const paging::RandomMark alg(inst);
  const paging::UlfdOracle oracle(inst);
  points.clear();
  std::size_t violations = 0;
  std::ostringstream detail;
  detail << "OPT=" << opt;
  for (double a : alpha_grid()) {
    const auto r = estimate_ratio_given_opt(alg, oracle, inst, InfusionParameter(a), 1000, 7, opt);
    const double limit = paging_bound(k, a) * opt + 2.0 * k + 3.0 * r.std_error;
    points.push_back({a, r.mean_cost, r.std_error, opt, limit});
    violations += r.mean_cost > limit;
    detail << " a=" << fmt(a) << ":" << fmt(r.mean_cost) << (r.mean_cost > limit ? "!" : "");
  }
  out.pass = violations == 0;
  out.detail = detail.str();
  return out;
}

// 4. Mean cost does not grow with alpha beyond noise.
inline CriterionOutcome monotone_benefit(const std::vector<SweepPoint>& points) {
  auto out = outcome(4, "paging sweep mean non-increasing in alpha within 3 pooled se");
  std::size_t violations = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double pooled = std::sqrt(points[i].std_error * points[i].std_error +
                                    points[i + 1].std_error * points[i + 1].std_error);
    const double excess = points[i + 1].mean - points[i].mean - 3.0 * pooled;
    violations += excess > 0.0;
    worst = std::max(worst, points[i + 1].mean - points[i].mean);
  }
  out.pass = points.size() == alpha_grid().size() && violations == 0;
  out.detail = std::to_string(violations) + " violations, largest increase " + fmt(worst);
  return out;
}

// 5. Uniform MTS sweep on paging-derived tasks.
inline CriterionOutcome mts_sweep() {
  auto out = outcome(5, "MTS sweep n in {4,8}: mean <= min{2H_n, 2/alpha+2} OPT + 4 + 3 se");
  std::size_t violations = 0;
  std::ostringstream detail;
  for (std::size_t n : {4, 8}) {
    const auto inst = mts::paging_to_mts(paging::paging_adversary(n - 1, 800, 777 + n));
    const double opt = mts::offline_optimum(inst);
    const mts::UnifMts alg(inst);
    const mts::LtsOracle oracle;
    detail << (n == 4 ? "" : " | ") << "n=" << n << " OPT=" << opt;
    for (double a : alpha_grid()) {
      const auto r = estimate_ratio_given_opt(alg, oracle, inst, InfusionParameter(a), 500, 11, opt);
      const double limit = mts_bound(n, a) * opt + 4.0 + 3.0 * r.std_error;
      violations += r.mean_cost > limit;
      if (a == 0.0 || a == 0.5 || a == 1.0) {
        detail << " a=" << fmt(a) << ":" << fmt(r.mean_cost) << (r.mean_cost > limit ? "!" : "");
      }
    }
  }
  out.pass = violations == 0;
  out.detail = std::to_string(violations) + " violations; " + detail.str();
  return out;
}

// 6. Fractional cost against the exact optimum.
inline CriterionOutcome fractional_bound() {
  auto out = outcome(6, "fractional sum x <= 2(ceil(log2 d) + 2) OPT");
  std::size_t violations = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 8 + seed % 17;
    const std::size_t m = 6 + (seed * 5) % 15;
    const auto inst = setcover::random_set_cover_instance(n, m, 2 * n, 5000 + seed, 0.2);
    const double d = static_cast<double>(setcover::element_degree(inst));
    const double opt = static_cast<double>(setcover::exact_opt(inst).size);
    const double frac = setcover::fractional_cost(setcover::fractional_solution(inst));
    const double bound = 2.0 * (std::ceil(std::log2(d)) + 2.0) * opt;
    violations += frac > bound;
    worst = std::max(worst, opt > 0.0 ? frac / opt : 0.0);
  }
  out.pass = violations == 0;
  out.detail = std::to_string(violations) + " violations in 200 instances, max sum x / OPT " + fmt(worst);
  return out;
}

// 7. The Las Vegas patch is rarely needed.
inline CriterionOutcome patch_rate() {
  auto out = outcome(7, "c=3, n>=16, alpha=0: patch fires in <= 2% of 2000 runs");
  std::size_t runs = 0, patched = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto inst = setcover::random_set_cover_instance(16 + i % 9, 12, 40, 9000 + i, 0.2);
    const setcover::RandSc alg(inst);
    const setcover::BoostOracle oracle(inst.sets(), {});
    for (std::uint64_t t = 0; t < 100; ++t) {
      setcover::RandSc a = alg;
      setcover::BoostOracle o = oracle;
      play(a, o, inst, InfusionParameter(0.0), trial_seed(i, t));
      ++runs;
      patched += a.patches() > 0;
    }
  }
  const double rate = static_cast<double>(patched) / static_cast<double>(runs);
  out.pass = rate <= 0.02;
  out.detail = std::to_string(patched) + "/" + std::to_string(runs) + " runs patched";
  return out;
}

// 8. Perfect advice on phased tree instances.
inline CriterionOutcome tree_with_advice() {
  auto out = outcome(8, "phased trees D=3 P=10, alpha=1: mean <= 3 (3 ln n) OPT");
  const auto inst = setcover::phased_tree_adversary(3, 10, {setcover::MassMode::kMixed, 1.0});
  const auto cover = setcover::exact_opt(inst);
  const double opt = static_cast<double>(cover.size);
  const setcover::BoostOracle oracle(inst.sets(), cover.sets);
  const auto r = estimate_ratio_given_opt(setcover::RandSc(inst), oracle, inst,
                                          InfusionParameter(1.0), 500, 13, opt);
  const double limit = 3.0 * (3.0 * std::log(static_cast<double>(inst.n))) * opt;
  out.pass = r.mean_cost <= limit && opt == 10.0;
  out.detail = "OPT=" + fmt(opt) + " mean=" + fmt(r.mean_cost) + " limit=" + fmt(limit);
  return out;
}

// 9. Unadvised evictions are uniform over the eviction candidates.
inline CriterionOutcome eviction_uniformity() {
  auto out = outcome(9, "alpha=0 evictions uniform (chi-square, p >= 1e-3)");
  const std::size_t k = 6;
  // counts[u][r]: evictions of the r-th smallest of u candidates.
  std::vector<std::vector<std::size_t>> counts(k + 1);
  for (std::size_t u = 1; u <= k; ++u) counts[u].assign(u, 0);
  std::size_t faults = 0;
  for (std::uint64_t seed = 0; faults < 20000; ++seed) {
    const auto inst = paging::random_paging_instance(k, 2 * k, 5000, 31 + seed);
    paging::RandomMark alg(inst);
    paging::UlfdOracle oracle(inst);
    paging::CacheState before(inst.k, inst.n);
    play(alg, oracle, inst, InfusionParameter(0.0), seed,
         [&](std::size_t, paging::PageId, const auto&, const paging::RandomMark::Answer& ans, double,
             const paging::RandomMark& a) {
           if (ans.evicted != paging::kNoPage) {
             auto cand = paging::eviction_candidates(before);
             std::sort(cand.begin(), cand.end());
             const auto rank = std::lower_bound(cand.begin(), cand.end(), ans.evicted) - cand.begin();
             ++counts[cand.size()][static_cast<std::size_t>(rank)];
             ++faults;
           }
           before = a.cache();
         });
  }
  std::vector<stats::ChiSquare> parts;
  for (std::size_t u = 2; u <= k; ++u) parts.push_back(stats::chi_square_uniform(counts[u]));
  const auto pooled = stats::chi_square_pooled(parts);
  out.pass = pooled.p_value >= 1e-3;
  out.detail = std::to_string(faults) + " evictions, chi2=" + fmt(pooled.statistic) + " dof=" +
               std::to_string(pooled.dof) + " p=" + fmt(pooled.p_value);
  return out;
}

// 10. The infusion coin lands at rate alpha.
inline CriterionOutcome infusion_rate() {
  auto out = outcome(10, "infused fraction within 3 sqrt(a(1-a)/1e4) of alpha");
  const std::size_t rounds = 10000;
  const auto inst = paging::paging_adversary(3, rounds, 99);
  bool pass = true;
  std::ostringstream detail;
  for (double a : {0.1, 0.5, 0.9}) {
    const auto trace = run_game(paging::RandomMark(inst), paging::UlfdOracle(inst), inst,
                                InfusionParameter(a), 4242);
    const double frac = static_cast<double>(trace.infused_count()) / static_cast<double>(rounds);
    const bool ok = std::abs(frac - a) <= stats::binomial_band(a, rounds);
    pass = pass && ok;
    detail << " a=" << fmt(a) << ":" << fmt(frac);
  }
  out.pass = pass;
  out.detail = detail.str().substr(1);
  return out;
}

// 11. Generator ground truth.
inline CriterionOutcome generator_ground_truth() {
  auto out = outcome(11, "generators: adversary phases cost Belady 1, trees OPT 1 per phase, phase length k H_k");
  std::size_t bad_phases = 0, phases_checked = 0;
  for (std::size_t k : {3, 6}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = paging::paging_adversary(k, 2000, 300 + seed);
      const auto part = paging::k_phase_partition(inst);
      std::vector<std::size_t> per_phase(part.phases.size(), 0);
      for (auto r : paging::belady_opt(inst).fault_rounds) ++per_phase[part.phase_of(r)];
      bad_phases += per_phase.front() != k;
      for (std::size_t i = 1; i < per_phase.size(); ++i) bad_phases += per_phase[i] != 1;
      phases_checked += per_phase.size();
    }
  }
  std::size_t bad_trees = 0;
  for (std::size_t depth : {2, 3, 4}) {
    for (std::size_t phases : {1, 3, 5}) {
      for (auto mode : {setcover::MassMode::kUnadvised, setcover::MassMode::kMixed}) {
        const auto inst = setcover::phased_tree_adversary(depth, phases, {mode, 0.5});
        bad_trees += setcover::exact_opt(inst).size != phases;
      }
    }
  }
  const std::size_t k = 6;
  const auto inst = paging::paging_adversary(k, 200000, 4711);
  const auto part = paging::k_phase_partition(inst);
  std::vector<double> lengths;
  for (std::size_t i = 0; i + 1 < part.phases.size(); ++i) {
    lengths.push_back(static_cast<double>(part.phases[i].length()));
  }
  const auto s = stats::summarize(lengths);
  const double expected = static_cast<double>(k) * harmonic(k);
  const bool length_ok = std::abs(s.mean - expected) <= 3.0 * s.std_error;
  out.pass = bad_phases == 0 && bad_trees == 0 && length_ok;
  out.detail = std::to_string(bad_phases) + "/" + std::to_string(phases_checked) +
               " bad adversary phases, " + std::to_string(bad_trees) + " bad trees, phase length " +
               fmt(s.mean) + " vs " + fmt(expected) + " (se " + fmt(s.std_error) + ")";
  return out;
}

// 12. Middle phases: as many vanishing as clean pages, and no cost once the
// vanishing pages are gone.
inline CriterionOutcome vanishing_pages() {
  auto out = outcome(12, "middle phases: vanishing = clean, zero cost after vanishing pages evicted");
  std::size_t count_bad = 0, cost_bad = 0, phases = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t k = 4 + seed % 3;
    const auto inst = paging::drifting_paging_instance(k, k + 4, 600, 800 + seed);
    const auto part = paging::k_phase_partition(inst);
    for (std::size_t i = 1; i + 1 < part.phases.size(); ++i) {
      count_bad += part.phases[i].vanishing_count() != part.phases[i].clean_count();
      ++phases;
    }
    paging::RandomMark alg(inst);
    paging::UlfdOracle oracle(inst);
    paging::CacheState before(inst.k, inst.n);
    play(alg, oracle, inst, InfusionParameter(0.1 * static_cast<double>(seed % 11)), seed,
         [&](std::size_t round, paging::PageId, const auto&, const auto&, double cost,
             const paging::RandomMark& a) {
           const std::size_t ph = part.phase_of(round);
           if (ph > 0 && ph + 1 < part.phases.size()) {
             const auto& van = part.phases[ph].vanishing;
             const bool gone = std::none_of(van.begin(), van.end(),
                                            [&](paging::PageId p) { return before.resident(p); });
             cost_bad += gone && cost != 0.0;
           }
           before = a.cache();
         });
  }
  out.pass = count_bad == 0 && cost_bad == 0;
  out.detail = std::to_string(phases) + " middle phases, " + std::to_string(count_bad) +
               " count mismatches, " + std::to_string(cost_bad) + " costly rounds after vanishing";
  return out;
}

// 13. Exact marginals against Monte Carlo.
inline CriterionOutcome marginals() {
  auto out = outcome(13, "marginal_inclusion within 3 sigma of Monte Carlo (1e4 trials, 50 pairs)");
  std::size_t pairs = 0, misses = 0;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto inst = setcover::random_set_cover_instance(16, 10, 30, 600 + i, 0.2);
    const double alpha = i % 2 == 0 ? 0.0 : 0.5;
    const setcover::BoostOracle oracle(inst);
    const setcover::RandSc base(inst, {3.0, false, setcover::Gate::kFractional});
    const std::size_t trials = 10000;
    std::vector<std::size_t> hits(inst.sets(), 0);
    setcover::RandSc last = base;
    for (std::size_t t = 0; t < trials; ++t) {
      setcover::RandSc a = base;
      setcover::BoostOracle o = oracle;
      play(a, o, inst, InfusionParameter(alpha), trial_seed(70 + i, t));
      for (setcover::SetId s = 0; s < inst.sets(); ++s) hits[s] += a.rounded()[s];
      last = std::move(a);
    }
    // Five sets per instance, preferring those the rounding touched.
    std::vector<setcover::SetId> order(inst.sets());
    for (setcover::SetId s = 0; s < inst.sets(); ++s) order[s] = s;
    std::stable_partition(order.begin(), order.end(),
                          [&](setcover::SetId s) { return !last.log().history(s).empty(); });
    for (std::size_t j = 0; j < 5; ++j) {
      const auto s = order[j];
      const double p = setcover::marginal_inclusion(last.log(), s, alpha, oracle.cover()[s] != 0);
      const double freq = static_cast<double>(hits[s]) / static_cast<double>(trials);
      const double band = stats::binomial_band(p, trials);
      misses += std::abs(freq - p) > band + 1e-12;
      worst = std::max(worst, band > 0.0 ? std::abs(freq - p) / (band / 3.0) : 0.0);
      ++pairs;
    }
  }
  out.pass = misses == 0 && pairs == 50;
  out.detail = std::to_string(misses) + "/" + std::to_string(pairs) + " outside 3 sigma, max |z| " + fmt(worst);
  return out;
}

// 14. The lower-bound distribution stresses the unadvised algorithm.
inline CriterionOutcome lower_bound_sanity() {
  auto out = outcome(14, "k=6 adversary, alpha=0: empirical ratio >= 0.9 H_k");
  const std::size_t k = 6;
  double cost = 0.0, opt = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = paging::paging_adversary(k, 3000, 1300 + seed);
    const auto r = estimate_ratio(paging::RandomMark(inst), paging::UlfdOracle(inst), inst,
                                  InfusionParameter(0.0), 50, seed);
    cost += r.mean_cost;
    opt += r.opt_cost;
  }
  const double ratio = cost / opt;
  const double limit = 0.9 * harmonic(k);
  out.pass = ratio >= limit;
  out.detail = "ratio " + fmt(ratio) + " vs " + fmt(limit);
  return out;
}

template <class Fn>
CriterionOutcome timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CriterionOutcome out = fn();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace acceptance

inline std::string format_outcome(const CriterionOutcome& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " -- " << c.detail << " ("
     << acceptance::fmt(c.seconds) << "s)";
  return os.str();
}

// Runs the selected criteria (all when `ids` is empty) in order, reporting
// each one as soon as it finishes.
inline std::vector<CriterionOutcome> run_acceptance(
    const std::vector<int>& ids = {},
    const std::function<void(const CriterionOutcome&)>& report = nullptr) {
  using namespace acceptance;
  auto wanted = [&](int id) { return ids.empty() || std::count(ids.begin(), ids.end(), id) > 0; };
  std::vector<CriterionOutcome> out;
  auto add = [&](CriterionOutcome c) {
    if (report) report(c);
    out.push_back(std::move(c));
  };
  std::vector<SweepPoint> sweep;
  if (wanted(1)) add(timed(optimal_at_k_plus_one));
  if (wanted(2)) add(timed(two_approximation));
  if (wanted(3) || wanted(4)) {
    auto c3 = timed([&] { return paging_sweep(sweep); });
    if (wanted(3)) add(c3);
    if (wanted(4)) add(timed([&] { return monotone_benefit(sweep); }));
  }
  if (wanted(5)) add(timed(mts_sweep));
  if (wanted(6)) add(timed(fractional_bound));
  if (wanted(7)) add(timed(patch_rate));
  if (wanted(8)) add(timed(tree_with_advice));
  if (wanted(9)) add(timed(eviction_uniformity));
  if (wanted(10)) add(timed(infusion_rate));
  if (wanted(11)) add(timed(generator_ground_truth));
  if (wanted(12)) add(timed(vanishing_pages));
  if (wanted(13)) add(timed(marginals));
  if (wanted(14)) add(timed(lower_bound_sanity));
  return out;
}

inline bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.pass; });
}

}  // namespace ria::harness
