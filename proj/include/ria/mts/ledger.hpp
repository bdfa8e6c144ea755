#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ria/mts/instance.hpp"

namespace ria::mts {

// Processing cost each state would have accumulated had it been occupied for
// the whole current phase. Task r^i is charged at rate r^i(j) over the time
// interval [i, i + 1]. A state is saturated once its accumulation reaches 1;
// the phase closes at the first instant every state is saturated.
struct SaturationLedger {
  Rational phase_start = 0;
  Rational now = 0;
  std::vector<Rational> accumulated;

  static SaturationLedger fresh(std::size_t n, const Rational& start = 0) {
    return {start, start, std::vector<Rational>(n, Rational(0))};
  }

  std::size_t states() const noexcept { return accumulated.size(); }
  bool saturated(StateId j) const { return accumulated[j] >= 1; }

  std::vector<StateId> unsaturated() const {
    std::vector<StateId> out;
    for (StateId j = 0; j < accumulated.size(); ++j) {
      if (!saturated(j)) out.push_back(j);
    }
    return out;
  }

  bool operator==(const SaturationLedger&) const = default;
};

struct RoundAdvance {
  SaturationLedger ledger;          // state at time round + 1
  std::vector<Rational> boundaries;  // phase ends inside (round, round + 1]
  // Saturation instants inside the round for the phase that was open at the
  // start of the round; unset for states that do not saturate in it.
  std::vector<std::optional<Rational>> saturation_times;

  bool phase_ended() const noexcept { return !boundaries.empty(); }
};

// Advances the ledger across [round, round + 1] under the constant task.
// Several phases may close inside one round; each closure resets the
// accumulation and the remainder of the round is charged to the new phase.
inline RoundAdvance accumulate_round(SaturationLedger ledger, std::span<const Rational> task,
                                     std::size_t round) {
  if (task.size() != ledger.states()) throw std::invalid_argument("task/ledger size mismatch");
  if (ledger.now != Rational(round)) throw std::invalid_argument("ledger is not at the round start");

  const Rational end = Rational(round + 1);
  RoundAdvance out;
  out.saturation_times.assign(task.size(), std::nullopt);
  Rational cursor = ledger.now;
  bool first_phase = true;

  for (;;) {
    bool closes = true;
    Rational last = cursor;
    for (StateId j = 0; j < task.size(); ++j) {
      if (ledger.saturated(j)) continue;
      if (task[j] == 0) {
        closes = false;
        continue;
      }
      const Rational t = cursor + (1 - ledger.accumulated[j]) / task[j];
      if (t > end) {
        closes = false;
        continue;
      }
      if (first_phase) out.saturation_times[j] = t;
      if (t > last) last = t;
    }
    first_phase = false;
    if (!closes) break;
    out.boundaries.push_back(last);
    for (auto& a : ledger.accumulated) a = 0;
    ledger.phase_start = last;
    cursor = last;
  }

  const Rational span = end - cursor;
  if (span > 0) {
    for (StateId j = 0; j < task.size(); ++j) ledger.accumulated[j] += span * task[j];
  }
  ledger.now = end;
  out.ledger = std::move(ledger);
  return out;
}

// Phase structure of a whole instance. It depends on the tasks alone, so one
// timeline is shared by every run on the instance.
struct PhaseTimeline {
  struct Round {
    bool phase_ends = false;
    std::vector<std::uint8_t> saturated_after;  // per state, at round + 1
    StateId cheapest = 0;
  };

  std::vector<SaturationLedger> before;  // ledger at the start of each round
  std::vector<Round> rounds;
  std::vector<Rational> boundaries;      // every phase end, in order
  SaturationLedger final_ledger;

  static std::shared_ptr<const PhaseTimeline> build(const MtsInstance& inst) {
    auto tl = std::make_shared<PhaseTimeline>();
    tl->before.reserve(inst.size());
    tl->rounds.reserve(inst.size());
    SaturationLedger ledger = SaturationLedger::fresh(inst.n);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      tl->before.push_back(ledger);
      RoundAdvance adv = accumulate_round(ledger, inst.tasks[i], i);
      Round r;
      r.phase_ends = adv.phase_ended();
      r.saturated_after.resize(inst.n);
      for (StateId j = 0; j < inst.n; ++j) r.saturated_after[j] = adv.ledger.saturated(j) ? 1 : 0;
      r.cheapest = cheapest_state(inst.tasks[i]);
      tl->rounds.push_back(std::move(r));
      tl->boundaries.insert(tl->boundaries.end(), adv.boundaries.begin(), adv.boundaries.end());
      ledger = std::move(adv.ledger);
    }
    tl->final_ledger = std::move(ledger);
    return tl;
  }
};

}  // namespace ria::mts
