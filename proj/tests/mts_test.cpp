#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gtest/gtest.h"
#include "ria/core/game.hpp"
#include "ria/mts.hpp"
#include "ria/paging.hpp"

namespace ria::mts {
namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

std::vector<Rational> task(std::initializer_list<Rational> costs) { return costs; }

MtsInstance make(std::size_t n, std::vector<std::vector<Rational>> tasks) {
  MtsInstance inst;
  inst.n = n;
  inst.tasks = std::move(tasks);
  inst.validate();
  return inst;
}

// Cumulative processing cost of state j over [from, to] straight from the
// definition: the rate on [i, i + 1] is r^i(j).
Rational processing(const MtsInstance& inst, StateId j, const Rational& from, const Rational& to) {
  Rational sum = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Rational lo = std::max(from, Rational(i));
    const Rational hi = std::min(to, Rational(i + 1));
    if (hi > lo) sum += (hi - lo) * inst.tasks[i][j];
  }
  return sum;
}

// Phase ends found globally: from each phase start, every state's saturation
// instant is located by scanning whole rounds, and the phase ends at the
// latest of them.
std::vector<Rational> brute_boundaries(const MtsInstance& inst) {
  std::vector<Rational> out;
  Rational start = 0;
  const Rational horizon(inst.size());
  for (;;) {
    std::optional<Rational> end;
    bool all = true;
    for (StateId j = 0; j < inst.n && all; ++j) {
      std::optional<Rational> t;
      Rational acc = 0;
      for (std::size_t i = 0; i < inst.size() && !t; ++i) {
        const Rational lo = std::max(start, Rational(i));
        const Rational hi = Rational(i + 1);
        if (hi <= lo) continue;
        const Rational r = inst.tasks[i][j];
        if (acc + (hi - lo) * r >= 1) {
          t = lo + (1 - acc) / r;
        } else {
          acc += (hi - lo) * r;
        }
      }
      if (!t) {
        all = false;
      } else if (!end || *t > *end) {
        end = t;
      }
    }
    if (!all || !end || *end > horizon) break;
    out.push_back(*end);
    start = *end;
  }
  return out;
}

// Minimum over all n^len schedules.
Rational brute_opt(const MtsInstance& inst, StateId initial = 0) {
  std::vector<StateId> s(inst.size(), 0);
  std::optional<Rational> best;
  for (;;) {
    const Rational c = evaluate_schedule(inst, s, initial).total();
    if (!best || c < *best) best = c;
    std::size_t i = 0;
    while (i < s.size() && ++s[i] == inst.n) s[i++] = 0;
    if (i == s.size()) break;
  }
  return best.value_or(Rational(0));
}

TEST(ParseRational, DecimalsAndFractions) {
  EXPECT_EQ(parse_rational("0.6"), q(3, 5));
  EXPECT_EQ(parse_rational("3/7"), q(3, 7));
  EXPECT_EQ(parse_rational("12"), q(12));
  EXPECT_EQ(parse_rational("1.5e-2"), q(3, 200));
  EXPECT_EQ(parse_rational("-0.25"), q(-1, 4));
  EXPECT_THROW(parse_rational("abc"), InvalidInstance);
  EXPECT_THROW(parse_rational("1/0"), InvalidInstance);
  EXPECT_THROW(parse_rational("0.5x"), InvalidInstance);
  EXPECT_EQ(to_string(q(3, 5)), "3/5");
}

TEST(AccumulateRound, LinearAccumulation) {
  const auto adv = accumulate_round(SaturationLedger::fresh(2, 1), task({q(1, 2), q(1, 4)}), 1);
  EXPECT_EQ(adv.ledger.accumulated, task({q(1, 2), q(1, 4)}));
  EXPECT_FALSE(adv.phase_ended());
  EXPECT_FALSE(adv.ledger.saturated(0));
  EXPECT_EQ(adv.ledger.now, q(2));
}

TEST(AccumulateRound, ExactSaturationInstant) {
  SaturationLedger l = SaturationLedger::fresh(2, 1);
  l = accumulate_round(l, task({q(1, 2), q(1, 4)}), 1).ledger;
  const auto adv = accumulate_round(l, task({q(3, 5), q(1, 4)}), 2);
  ASSERT_TRUE(adv.saturation_times[0].has_value());
  EXPECT_EQ(*adv.saturation_times[0], q(2) + q(5, 6));
  EXPECT_FALSE(adv.saturation_times[1].has_value());
  EXPECT_TRUE(adv.ledger.saturated(0));
  EXPECT_FALSE(adv.ledger.saturated(1));
  EXPECT_FALSE(adv.phase_ended());
}

TEST(AccumulateRound, ZeroTaskLeavesLedger) {
  SaturationLedger l = SaturationLedger::fresh(3);
  l.accumulated = task({q(1, 3), q(2, 3), q(0)});
  const auto adv = accumulate_round(l, task({q(0), q(0), q(0)}), 0);
  EXPECT_EQ(adv.ledger.accumulated, l.accumulated);
  EXPECT_FALSE(adv.phase_ended());
}

TEST(AccumulateRound, SeveralPhasesInOneRound) {
  const auto adv = accumulate_round(SaturationLedger::fresh(2), task({q(4), q(2)}), 0);
  ASSERT_EQ(adv.boundaries.size(), 2u);
  EXPECT_EQ(adv.boundaries[0], q(1, 2));
  EXPECT_EQ(adv.boundaries[1], q(1));
  EXPECT_EQ(adv.ledger.phase_start, q(1));
  EXPECT_EQ(adv.ledger.accumulated, task({q(0), q(0)}));
}

TEST(AccumulateRound, RejectsMisalignedLedger) {
  EXPECT_THROW(accumulate_round(SaturationLedger::fresh(2), task({q(1), q(1)}), 3),
               std::invalid_argument);
}

TEST(PhaseTimeline, MatchesGlobalScanAndClosesExactly) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = random_mts_instance(2 + seed % 4, 60, seed, 120);
    const auto tl = PhaseTimeline::build(inst);
    EXPECT_EQ(tl->boundaries, brute_boundaries(inst)) << inst.name;
    Rational start = 0;
    for (const auto& b : tl->boundaries) {
      Rational last = 0;
      for (StateId j = 0; j < inst.n; ++j) {
        const Rational acc = processing(inst, j, start, b);
        EXPECT_GE(acc, 1);
        // Every state was saturated strictly before b except the last one.
        if (acc == 1) last = 1;
      }
      EXPECT_EQ(last, 1) << "phase end is not minimal";
      start = b;
    }
  }
}

TEST(UnifMtsStep, StaysWhileUnsaturated) {
  const auto s = unif_mts_step(SaturationLedger::fresh(3), 1, task({q(1, 2), q(3, 10), q(2)}), 0, 0);
  EXPECT_EQ(s.branch, Branch::kStay);
  EXPECT_EQ(s.next, 1u);
  EXPECT_EQ(s.cost, q(3, 10));
}

TEST(UnifMtsStep, PhaseEndMovesToCheapest) {
  SaturationLedger l = SaturationLedger::fresh(3);
  l.accumulated = task({q(9, 10), q(19, 20), q(1, 2)});
  const auto s = unif_mts_step(l, 0, task({q(3, 10), q(1, 10), q(9, 10)}), 0, 0);
  EXPECT_EQ(s.branch, Branch::kPhaseEnd);
  EXPECT_EQ(s.next, 1u);
  EXPECT_EQ(s.cost, q(11, 10));
  ASSERT_EQ(s.advance.boundaries.size(), 1u);
  EXPECT_EQ(s.advance.boundaries[0], q(5, 9));
}

TEST(UnifMtsStep, RandomMoveFollowsBuffer) {
  SaturationLedger l = SaturationLedger::fresh(3);
  l.accumulated = task({q(9, 10), q(0), q(0)});
  const auto t = task({q(1, 2), q(1, 10), q(1, 5)});
  const auto s = unif_mts_step(l, 0, t, 0, 2);
  EXPECT_EQ(s.branch, Branch::kRandomMove);
  EXPECT_EQ(s.next, 2u);
  EXPECT_EQ(s.cost, q(6, 5));
  EXPECT_THROW(unif_mts_step(l, 0, t, 0, 0), ContractViolation);
}

TEST(Lts, LatestSaturationWins) {
  const auto inst = make(2, {task({q(1, 2), q(1, 4)}), task({q(3, 5), q(1, 4)}),
                             task({q(0), q(1, 4)}), task({q(0), q(1, 4)})});
  const auto l = SaturationLedger::fresh(2);
  EXPECT_EQ(forward_saturation_time(inst, l, 0, 0), q(1) + q(5, 6));
  EXPECT_EQ(forward_saturation_time(inst, l, 0, 1), q(4));
  EXPECT_EQ(lts_advice(inst, l, 0), 1u);
  const std::vector<StateId> only{0};
  EXPECT_EQ(lts_advice(inst, l, 0, only), 0u);
}

TEST(Lts, NeverSaturatingRanksLast) {
  const auto inst = make(3, {task({q(1), q(0), q(0)}), task({q(0), q(1, 2), q(0)})});
  EXPECT_EQ(lts_advice(inst, SaturationLedger::fresh(3), 0), 1u);
}

// Runs UnifMTS through the engine and returns per-round (branch, state, cost).
struct Round {
  Branch branch;
  StateId state;
  double cost;
  bool infused;
};

std::vector<Round> trace_rounds(const MtsInstance& inst, double alpha, std::uint64_t seed) {
  UnifMts alg(inst);
  LtsOracle oracle;
  std::vector<Round> out;
  std::vector<Branch> branches;
  play(alg, oracle, inst, InfusionParameter(alpha), seed,
       [&](std::size_t, const TaskRef&, const auto& buffer, StateId next, double cost, const UnifMts&) {
         out.push_back({Branch::kStay, next, cost, buffer.infused()});
       });
  // Re-derive the branch of each round from the recorded states.
  UnifMts replay(inst);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out[i].branch = replay.branch(i);
    replay.commit(inst.request(i), replay.domain(inst.request(i)), out[i].state);
  }
  return out;
}

TEST(UnifMts, TimelineAgreesWithExplicitLedger) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_mts_instance(4, 80, seed);
    const auto rounds = trace_rounds(inst, 0.3, seed);
    SaturationLedger l = SaturationLedger::fresh(inst.n);
    StateId cur = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto s = unif_mts_step(l, cur, inst.tasks[i], i, rounds[i].state);
      EXPECT_EQ(s.next, rounds[i].state);
      EXPECT_EQ(s.branch, rounds[i].branch);
      EXPECT_EQ(to_double(s.cost), rounds[i].cost);
      l = s.advance.ledger;
      cur = s.next;
    }
  }
}

TEST(UnifMts, LazyAndBoundedPerState) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_mts_instance(3 + seed % 4, 150, seed);
    const auto tl = PhaseTimeline::build(inst);
    const auto rounds = trace_rounds(inst, 0.1 * static_cast<double>(seed % 11), seed);
    StateId prev = 0;
    Rational paid = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto& r = rounds[i];
      if (r.state != prev) {
        EXPECT_NE(r.branch, Branch::kStay);
      }
      if (r.branch == Branch::kPhaseEnd || r.state != prev) paid = 0;
      if (r.branch != Branch::kPhaseEnd) {
        paid += inst.tasks[i][r.state];
        EXPECT_LT(paid, 1) << "round " << i;
        EXPECT_FALSE(tl->rounds[i].saturated_after[r.state]);
      }
      prev = r.state;
    }
  }
}

TEST(UnifMts, AdviceFinishesPhaseWithinTwo) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_mts_instance(5, 200, seed);
    const auto rounds = trace_rounds(inst, 1.0, seed);
    std::optional<double> since_advice;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto& r = rounds[i];
      if (r.branch == Branch::kPhaseEnd) {
        since_advice.reset();
        continue;
      }
      if (r.branch == Branch::kRandomMove && r.infused) {
        EXPECT_FALSE(since_advice.has_value()) << "advised state saturated before the phase end";
        since_advice = 0.0;
      }
      if (since_advice) {
        *since_advice += r.cost;
        EXPECT_LE(*since_advice, 2.0);
      }
    }
  }
}

TEST(UnifMts, CostAtLeastOfflineOptimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_mts_instance(4, 120, seed);
    UnifMts alg(inst);
    LtsOracle oracle;
    play(alg, oracle, inst, InfusionParameter(0.5), seed);
    EXPECT_GE(alg.exact_cost(), mts_offline_opt(inst).total());
  }
}

TEST(UnifMts, DomainIsUnsaturatedStates) {
  SaturationLedger l = SaturationLedger::fresh(3);
  const auto inst = make(3, {task({q(2), q(1, 10), q(1, 5)})});
  UnifMts alg(inst);
  const auto d = alg.domain(inst.request(0));
  EXPECT_EQ(d.candidates(), (std::vector<StateId>{1, 2}));
  EXPECT_THROW(alg.decide(inst.request(0), d, 0), ContractViolation);
}

TEST(OfflineOpt, SmallExamples) {
  EXPECT_EQ(mts_offline_opt(make(2, {task({q(0), q(1)}), task({q(1), q(0)})})).total(), q(1));
  EXPECT_EQ(brute_opt(make(2, {task({q(0), q(1)}), task({q(1), q(0)})})), q(1));
  EXPECT_EQ(mts_offline_opt(make(3, {task({q(0), q(0), q(0)}), task({q(0), q(0), q(0)})})).total(),
            q(0));
  // One task: stay and pay c_init, or move once to the cheapest state.
  const auto one = make(3, {task({q(3, 2), q(7, 10), q(1, 5)})});
  EXPECT_EQ(mts_offline_opt(one).total(), std::min(q(3, 2), 1 + q(1, 5)));
  const auto cheap = make(3, {task({q(1, 2), q(1, 10), q(1, 5)})});
  EXPECT_EQ(mts_offline_opt(cheap).total(), q(1, 2));
}

TEST(OfflineOpt, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_mts_instance(2 + seed % 3, 7, seed, 250);
    const auto sched = mts_offline_opt(inst);
    EXPECT_EQ(sched.total(), brute_opt(inst)) << inst.name;
    EXPECT_EQ(evaluate_schedule(inst, sched.states).total(), sched.total());
  }
}

TEST(OfflineOpt, AtLeastOnePerCompletedPhase) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_mts_instance(3, 200, seed, 120);
    const auto tl = PhaseTimeline::build(inst);
    const auto sched = mts_offline_opt(inst);
    Rational start = 0;
    for (const auto& end : tl->boundaries) {
      // Transitions strictly inside the phase plus processing over it.
      Rational cost = 0;
      for (std::size_t i = 0; i < inst.size(); ++i) {
        const StateId prev = i == 0 ? 0 : sched.states[i - 1];
        if (sched.states[i] != prev && Rational(i) > start && Rational(i) < end) cost += 1;
        const Rational lo = std::max(start, Rational(i));
        const Rational hi = std::min(end, Rational(i + 1));
        if (hi > lo) cost += (hi - lo) * inst.tasks[i][sched.states[i]];
      }
      EXPECT_GE(cost, 1) << "phase ending at " << to_string(end);
      start = end;
    }
    EXPECT_GE(sched.total(), Rational(tl->boundaries.size()));
  }
}

TEST(PagingToMts, SmallInstanceMatchesBelady) {
  paging::PagingInstance pg;
  pg.k = 2;
  pg.n = 3;
  pg.sequence = {1, 2, 3};
  const auto m = paging_to_mts(pg);
  EXPECT_EQ(m.n, 3u);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.tasks[0], task({q(4), q(0), q(0)}));
  const auto warm = cache_for_state(3, 0);
  EXPECT_EQ(mts_offline_opt(m).total(), Rational(paging::belady_opt(pg, warm).faults));
  EXPECT_EQ(mts_offline_opt(m).total(), q(2));
}

TEST(PagingToMts, EmptyAndInvalid) {
  paging::PagingInstance pg;
  pg.k = 2;
  pg.n = 3;
  EXPECT_TRUE(paging_to_mts(pg).tasks.empty());
  pg.n = 5;
  EXPECT_THROW(paging_to_mts(pg), InvalidInstance);
}

TEST(PagingToMts, AdversarialOptimaAgree) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pg = paging::paging_adversary(3, 60, seed);
    const auto m = paging_to_mts(pg);
    EXPECT_EQ(mts_offline_opt(m).total(),
              Rational(paging::belady_opt(pg, cache_for_state(pg.n, 0)).faults))
        << pg.name;
  }
}

}  // namespace
}  // namespace ria::mts
