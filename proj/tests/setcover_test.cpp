#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "ria/core/experiment.hpp"
#include "ria/core/game.hpp"
#include "ria/core/stats.hpp"
#include "ria/setcover.hpp"

namespace ria::setcover {
namespace {

SetCoverInstance make(std::size_t n, std::vector<std::vector<Element>> family,
                      std::vector<Element> sequence = {}) {
  SetCoverInstance inst;
  inst.n = n;
  inst.family = std::move(family);
  inst.sequence = std::move(sequence);
  inst.validate();
  return inst;
}

// Smallest covering subfamily by enumerating all 2^m of them; among those of
// minimum size, the lexicographically smallest sorted index list.
OptimalCover brute_cover(const SetCoverInstance& inst) {
  const auto need = arrived_elements(inst);
  const std::size_t m = inst.sets();
  OptimalCover best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<SetId> pick;
    for (SetId s = 0; s < m; ++s) {
      if (mask >> s & 1) pick.push_back(s);
    }
    bool ok = true;
    for (Element e : need) {
      bool hit = false;
      for (SetId s : pick) {
        hit = hit || std::count(inst.family[s].begin(), inst.family[s].end(), e) > 0;
      }
      ok = ok && hit;
    }
    if (!ok) continue;
    if (!found || pick.size() < best.size || (pick.size() == best.size && pick < best.sets)) {
      best = {pick.size(), pick};
      found = true;
    }
  }
  return best;
}

TEST(SetSystem, RejectsBadFamilies) {
  EXPECT_THROW(make(3, {{1, 2}}), InvalidInstance);
  EXPECT_THROW(make(2, {{1, 2}, {}}), InvalidInstance);
  EXPECT_THROW(make(2, {{1, 3}}), InvalidInstance);
  EXPECT_THROW(make(2, {{1, 2}}, {4}), InvalidInstance);
  const auto sys = SetSystem::build(make(3, {{3, 1}, {2, 3}}));
  EXPECT_EQ(sys->covering(3), (std::vector<SetId>{0, 1}));
  EXPECT_THROW(sys->covering(0), InvalidInstance);
  EXPECT_EQ(sys->members(0), (std::vector<Element>{1, 3}));
}

TEST(SetSystem, DegreeOverArrivedElements) {
  const auto inst = make(3, {{1, 2}, {2}, {2, 3}}, {1, 3});
  EXPECT_EQ(element_degree(inst), 1u);
  EXPECT_EQ(element_degree(make(3, {{1, 2}, {2}, {2, 3}}, {2})), 3u);
}

TEST(FractionalUpdate, DoublingExamples) {
  const auto sys = SetSystem::build(make(3, {{1, 2}, {1, 3}}));
  std::vector<double> x(2, 0.0);
  EXPECT_TRUE(fractional_update(x, 1, *sys));
  EXPECT_EQ(x, (std::vector<double>{0.5, 0.5}));
  EXPECT_TRUE(fractional_update(x, 2, *sys));
  EXPECT_EQ(x, (std::vector<double>{2.0, 0.5}));
  EXPECT_FALSE(fractional_update(x, 1, *sys));
  EXPECT_EQ(x, (std::vector<double>{2.0, 0.5}));
  EXPECT_THROW(fractional_update(x, 7, *sys), InvalidInstance);
}

TEST(Rounding, SelectionProbability) {
  // delta = 0 + 1/20 = 0.05, n = 20: 0.15 * ln 20 with ln 20 = 2.995732...
  EXPECT_NEAR(selection_probability(0.0, 20, 20, 3.0), 0.15 * 2.9957322735539909, 1e-12);
  EXPECT_NEAR(selection_probability(0.0, 20, 20, 3.0), 0.449, 5e-4);
  EXPECT_EQ(selection_probability(0.5, 2, 20, 3.0), 1.0);
}

TEST(Rounding, IndependentSelectionFrequencies) {
  const IndependentSelection dom({2, 5}, {0.449, 1.0});
  Rng rng{17};
  const std::size_t trials = 100000;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto sel = dom.sample(rng);
    ASSERT_TRUE(dom.contains(sel));
    ASSERT_TRUE(std::count(sel.begin(), sel.end(), 5));
    hits += std::count(sel.begin(), sel.end(), 2);
  }
  EXPECT_NEAR(static_cast<double>(hits) / trials, 0.449, stats::binomial_band(0.449, trials));
  EXPECT_FALSE(dom.is_forced());
  EXPECT_TRUE(IndependentSelection({1}, {1.0}).is_forced());
  EXPECT_TRUE(IndependentSelection::none().is_forced());
  EXPECT_FALSE(dom.contains({5, 2}));
  EXPECT_FALSE(dom.contains({3}));
}

TEST(Rounding, ForcedSelectionUsesNoRandomness) {
  Rng a{5}, b{5};
  EXPECT_EQ(IndependentSelection({1, 4}, {1.0, 0.0}).sample(a), (Selection{1}));
  EXPECT_EQ(a(), b());
}

TEST(LasVegasPatch, SmallestCoveringSet) {
  std::vector<std::vector<Element>> fam(8, std::vector<Element>{1});
  fam[4] = {1, 2};
  fam[7] = {2};
  const auto sys = SetSystem::build(make(2, fam));
  std::vector<char> selected(8, 0);
  EXPECT_EQ(las_vegas_patch(2, selected, *sys), SetId{4});
  selected[7] = 1;
  EXPECT_EQ(las_vegas_patch(2, selected, *sys), std::nullopt);
}

TEST(Marginal, ClosedForms) {
  SelectionLog log(3);
  EXPECT_EQ(marginal_inclusion(log, 0), 0.0);
  log.record(0, IndependentSelection({0, 1}, {1.0, 0.3}));
  log.record(1, IndependentSelection({1, 2}, {0.449, 0.2}));
  EXPECT_EQ(marginal_inclusion(log, 0), 1.0);
  EXPECT_NEAR(marginal_inclusion(log, 1), 0.6143, 1e-12);
  // Mixture: a set of the advised cover is bought surely when infused.
  EXPECT_NEAR(marginal_inclusion(log, 2, 0.5, true), 0.6, 1e-12);
  EXPECT_NEAR(marginal_inclusion(log, 2, 0.5, false), 0.2, 1e-12);
}

TEST(Marginal, MatchesIndependentDraws) {
  Rng rng{99};
  const std::size_t trials = 10000;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) hits += (bernoulli(rng, 0.3) || bernoulli(rng, 0.449));
  EXPECT_NEAR(static_cast<double>(hits) / trials, 0.6143, stats::binomial_band(0.6143, trials));
}

TEST(BoostAdvice, OptimalSetsSurelyOthersByProbability) {
  const IndependentSelection dom({1, 2, 3}, {0.3, 0.5, 0.1});
  std::vector<char> cover(4, 0);
  cover[2] = 1;
  Rng rng{3};
  const std::size_t trials = 20000;
  std::size_t h1 = 0, h3 = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto sel = boost_advice(cover, dom, rng);
    ASSERT_TRUE(std::count(sel.begin(), sel.end(), 2));
    h1 += std::count(sel.begin(), sel.end(), 1);
    h3 += std::count(sel.begin(), sel.end(), 3);
  }
  EXPECT_NEAR(static_cast<double>(h1) / trials, 0.3, stats::binomial_band(0.3, trials));
  EXPECT_NEAR(static_cast<double>(h3) / trials, 0.1, stats::binomial_band(0.1, trials));
  std::vector<char> all(4, 1);
  EXPECT_EQ(boost_advice(all, dom, rng), (Selection{1, 2, 3}));
}

TEST(ExactOpt, SmallCases) {
  EXPECT_EQ(exact_opt(make(4, {{1}, {2}, {3}, {4}}, {1, 2, 3, 4})).size, 4u);
  EXPECT_EQ(exact_opt(make(4, {{1}, {2}, {3}, {4}}, {2, 4, 2})).sets, (std::vector<SetId>{1, 3}));
  EXPECT_EQ(exact_opt(make(2, {{1, 2}})).size, 0u);
  // Two optimal covers {0, 3} and {1, 2}: the lexicographically smaller wins.
  const auto inst = make(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, {1, 2, 3, 4});
  EXPECT_EQ(exact_opt(inst).sets, (std::vector<SetId>{0, 3}));
}

TEST(ExactOpt, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_set_cover_instance(12, 8, 10, seed, 0.25);
    const auto got = exact_opt(inst);
    const auto want = brute_cover(inst);
    EXPECT_EQ(got.size, want.size) << inst.name;
    EXPECT_EQ(got.sets, want.sets) << inst.name;
  }
}

TEST(ExactOpt, BudgetIsEnforced) {
  const auto inst = random_set_cover_instance(24, 20, 40, 1, 0.15);
  EXPECT_THROW(exact_opt(inst, 3), BudgetExceeded);
}

TEST(Tree, Structure) {
  const auto inst = tree_instance(2);
  EXPECT_EQ(inst.n, 7u);
  ASSERT_EQ(inst.sets(), 4u);
  for (const auto& s : inst.family) EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(inst.family[0], (std::vector<Element>{1, 2, 4}));
  EXPECT_EQ(inst.family[3], (std::vector<Element>{1, 3, 7}));
  EXPECT_EQ(SetSystem::build(inst)->covering(1).size(), 4u);
  const auto d3 = tree_instance(3);
  EXPECT_EQ(d3.n, 15u);
  EXPECT_EQ(d3.sets(), 8u);
}

TEST(Tree, UnadvisedAdversaryFollowsLeftSpine) {
  // All masses are equal at every step: ties go left.
  const auto inst = tree_adversary(3);
  EXPECT_EQ(inst.sequence, (std::vector<Element>{1, 2, 4, 8}));
  EXPECT_EQ(exact_opt(inst).size, 1u);
  EXPECT_EQ(exact_opt(inst).sets, (std::vector<SetId>{0}));
}

TEST(Tree, AdversaryPathsAreCoveredBySingleSet) {
  for (std::size_t depth = 1; depth <= 5; ++depth) {
    for (double alpha : {0.0, 0.3, 1.0}) {
      const auto inst = tree_adversary(depth, {MassMode::kMixed, alpha});
      ASSERT_EQ(inst.size(), depth + 1);
      EXPECT_EQ(inst.sequence.front(), 1u);
      for (std::size_t i = 1; i < inst.size(); ++i) EXPECT_EQ(inst.sequence[i] / 2, inst.sequence[i - 1]);
      EXPECT_EQ(exact_opt(inst).size, 1u);
    }
  }
}

TEST(Tree, PhasedAdversary) {
  EXPECT_EQ(phased_tree_adversary(3, 1).sequence, tree_adversary(3).sequence);
  const auto inst = phased_tree_adversary(3, 5, {MassMode::kMixed, 0.5});
  EXPECT_EQ(inst.n, 75u);
  EXPECT_EQ(inst.sets(), 40u);
  EXPECT_EQ(exact_opt(inst).size, 5u);
  EXPECT_EQ(element_degree(inst), 8u);
  // Families of distinct phases are disjoint.
  for (SetId a = 0; a < inst.sets(); ++a) {
    for (SetId b = 0; b < inst.sets(); ++b) {
      if (a / 8 == b / 8) continue;
      std::vector<Element> common;
      std::set_intersection(inst.family[a].begin(), inst.family[a].end(), inst.family[b].begin(),
                            inst.family[b].end(), std::back_inserter(common));
      EXPECT_TRUE(common.empty());
    }
  }
}

TEST(RandSc, InvariantsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_set_cover_instance(20, 12, 40, seed, 0.2);
    const auto sys = SetSystem::build(inst);
    const BoostOracle oracle(inst);
    for (Gate gate : {Gate::kLazy, Gate::kFractional}) {
      RandSc alg(sys, {3.0, true, gate});
      std::vector<double> prev_x(inst.sets(), 0.0);
      std::vector<char> prev_sel(inst.sets(), 0);
      std::size_t cost = 0;
      std::size_t round = 0;
      BoostOracle o = oracle;
      play(alg, o, inst, InfusionParameter(0.3), seed,
           [&](std::size_t, const ElementRef& r, const auto&, const ScAnswer& a, double c,
               const RandSc& view) {
             const auto& fe = sys->covering(r.element);
             for (SetId s : a.rounded) EXPECT_TRUE(std::count(fe.begin(), fe.end(), s));
             if (a.patch) {
               EXPECT_EQ(*a.patch, fe.front());
             }
             EXPECT_TRUE(view.covered(r.element));
             if (gate == Gate::kFractional) {
               for (std::size_t i = 0; i <= round; ++i) {
                 EXPECT_TRUE(view.fractionally_covered(inst.sequence[i]));
               }
             }
             for (SetId s = 0; s < inst.sets(); ++s) {
               EXPECT_GE(view.x()[s], prev_x[s]);
               EXPECT_GE(view.selected()[s], prev_sel[s]);
             }
             prev_x = view.x();
             prev_sel = view.selected();
             cost += static_cast<std::size_t>(c);
             ++round;
           });
      EXPECT_EQ(cost, alg.selected_count());
      EXPECT_GE(alg.selected_count(), exact_opt(inst).size);
    }
  }
}

TEST(RandSc, LazyGateRoundsOnlyUncoveredElements) {
  const auto inst = random_set_cover_instance(16, 10, 60, 4, 0.2);
  RandSc alg(inst);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto r = inst.request(i);
    const bool was_covered = alg.covered(r.element) || alg.fractionally_covered(r.element);
    const auto dom = alg.domain(r);
    EXPECT_EQ(dom.active(), !was_covered);
    Rng rng{i};
    const auto a = alg.decide(r, dom, dom.sample(rng));
    const double c = alg.commit(r, dom, a);
    if (was_covered) {
      EXPECT_EQ(c, 0.0);
    }
  }
}

TEST(RandSc, FractionalGateMakesXDeterministic) {
  const auto inst = random_set_cover_instance(20, 14, 50, 8, 0.2);
  const auto reference = fractional_solution(inst);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandSc alg(inst, {3.0, true, Gate::kFractional});
    BoostOracle oracle(inst);
    play(alg, oracle, inst, InfusionParameter(0.1 * static_cast<double>(seed)), seed);
    EXPECT_EQ(alg.x(), reference);
  }
}

TEST(RandSc, FractionalCostBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_set_cover_instance(24, 20, 30, seed, 0.15);
    const double d = static_cast<double>(element_degree(inst));
    const double bound = 2.0 * (std::ceil(std::log2(d)) + 2.0) * static_cast<double>(exact_opt(inst).size);
    EXPECT_LE(fractional_cost(fractional_solution(inst)), bound) << inst.name;
  }
}

TEST(RandSc, RejectsBufferOutsideCoveringSets) {
  const auto inst = make(3, {{1, 2}, {2, 3}}, {1});
  RandSc alg(inst);
  const auto dom = alg.domain(inst.request(0));
  EXPECT_EQ(dom.sets(), (std::vector<SetId>{0}));
  EXPECT_THROW(alg.decide(inst.request(0), dom, {1}), ContractViolation);
}

TEST(RandSc, PatchOnlyWhenRoundingMisses) {
  const auto inst = make(3, {{1, 2}, {2, 3}}, {2});
  RandSc alg(inst);
  const auto r = inst.request(0);
  const auto dom = alg.domain(r);
  const auto a = alg.decide(r, dom, {});
  EXPECT_EQ(a.patch, SetId{0});
  EXPECT_EQ(alg.commit(r, dom, a), 1.0);
  EXPECT_EQ(alg.patches(), 1u);
  RandSc strict(inst, {3.0, false, Gate::kLazy});
  EXPECT_EQ(strict.decide(r, strict.domain(r), {}).patch, std::nullopt);
}

TEST(RandSc, RandomnessObliviousWrapperAccepts) {
  const auto inst = random_set_cover_instance(16, 10, 30, 2, 0.2);
  auto wrapped = enforce_randomness_oblivious(RandSc(inst));
  BoostOracle oracle(inst);
  EXPECT_NO_THROW(play(wrapped, oracle, inst, InfusionParameter(0.5), 7));
}

TEST(RandSc, FullAdviceBuysOptimalSetForElement) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_set_cover_instance(18, 12, 40, seed, 0.2);
    const BoostOracle oracle(inst);
    RandSc alg(inst);
    BoostOracle o = oracle;
    play(alg, o, inst, InfusionParameter(1.0), seed,
         [&](std::size_t, const ElementRef& r, const auto&, const ScAnswer& a, double, const RandSc&) {
           if (a.rounded.empty()) return;
           const bool hit = std::any_of(a.rounded.begin(), a.rounded.end(),
                                        [&](SetId s) { return oracle.cover()[s] != 0; });
           EXPECT_TRUE(hit) << "element " << r.element;
         });
  }
}

TEST(RandSc, BoostNeverLowersSelectionProbability) {
  for (double p : {0.0, 0.1, 0.449, 1.0}) {
    for (double alpha : {0.0, 0.25, 1.0}) {
      EXPECT_GE(mixed_probability(p, alpha, true), p);
      EXPECT_EQ(mixed_probability(p, alpha, false), p);
    }
  }
}

TEST(RandSc, PatchRateIsSmall) {
  std::size_t runs = 0, patched = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_set_cover_instance(16, 12, 32, seed, 0.2);
    const RandSc alg(inst);
    const BoostOracle oracle(inst.sets(), {});
    for (std::uint64_t t = 0; t < 50; ++t) {
      RandSc a = alg;
      BoostOracle o = oracle;
      play(a, o, inst, InfusionParameter(0.0), trial_seed(seed, t));
      ++runs;
      patched += a.patches() > 0;
    }
  }
  EXPECT_LE(static_cast<double>(patched), 0.02 * static_cast<double>(runs));
}

TEST(RandSc, MarginalsMatchMonteCarlo) {
  const auto inst = random_set_cover_instance(16, 10, 30, 11, 0.2);
  const BoostOracle oracle(inst);
  for (double alpha : {0.0, 0.5}) {
    RandSc base(inst, {3.0, false, Gate::kFractional});
    const std::size_t trials = 10000;
    std::vector<std::size_t> hits(inst.sets(), 0);
    RandSc last = base;
    for (std::size_t t = 0; t < trials; ++t) {
      RandSc a = base;
      BoostOracle o = oracle;
      play(a, o, inst, InfusionParameter(alpha), trial_seed(5, t));
      for (SetId s = 0; s < inst.sets(); ++s) hits[s] += a.rounded()[s];
      last = a;
    }
    for (SetId s = 0; s < inst.sets(); ++s) {
      const double p = marginal_inclusion(last.log(), s, alpha, oracle.cover()[s] != 0);
      EXPECT_NEAR(static_cast<double>(hits[s]) / trials, p, stats::binomial_band(p, trials) + 1e-12)
          << "set " << s << " alpha " << alpha;
    }
  }
}

}  // namespace
}  // namespace ria::setcover
