#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/core/infusion.hpp"
#include "ria/mts/instance.hpp"
#include "ria/mts/ledger.hpp"

namespace ria::mts {

// Which rule picked the state served in a round.
enum class Branch {
  kStay,        // current state stays unsaturated through the round
  kPhaseEnd,    // the phase closes inside the round: go to the cheapest state
  kRandomMove,  // move to an unsaturated state named by the buffer
};

struct MtsStep {
  StateId next = 0;
  Rational cost = 0;
  Branch branch = Branch::kStay;
  RoundAdvance advance;
};

inline Rational move_cost(StateId from, StateId to, std::span<const Rational> task) {
  return Rational(from == to ? 0 : 1) + task[to];
}

// One UnifMTS round from an explicit ledger. `buffer` is read in the
// kRandomMove branch only.
inline MtsStep unif_mts_step(const SaturationLedger& ledger, StateId current,
                             std::span<const Rational> task, std::size_t round, StateId buffer) {
  MtsStep s;
  s.advance = accumulate_round(ledger, task, round);
  if (s.advance.phase_ended()) {
    s.branch = Branch::kPhaseEnd;
    s.next = cheapest_state(task);
  } else if (!s.advance.ledger.saturated(current)) {
    s.branch = Branch::kStay;
    s.next = current;
  } else {
    s.branch = Branch::kRandomMove;
    if (buffer >= task.size() || s.advance.ledger.saturated(buffer)) {
      throw ContractViolation("UnifMTS: buffer state " + std::to_string(buffer) +
                              " is saturated at the end of the round");
    }
    s.next = buffer;
  }
  s.cost = move_cost(current, s.next, task);
  return s;
}

// UnifMTS over a precomputed phase timeline. Starts in state 0.
class UnifMts {
 public:
  using Request = TaskRef;
  using Decision = StateId;
  using Domain = UniformChoice<StateId>;
  using Answer = StateId;  // state serving the round

  explicit UnifMts(const MtsInstance& inst, StateId initial = 0)
      : UnifMts(PhaseTimeline::build(inst), initial) {}
  UnifMts(std::shared_ptr<const PhaseTimeline> timeline, StateId initial = 0)
      : timeline_(std::move(timeline)), current_(initial) {}

  Branch branch(std::size_t round) const {
    const auto& r = timeline_->rounds[round];
    if (r.phase_ends) return Branch::kPhaseEnd;
    if (!r.saturated_after[current_]) return Branch::kStay;
    return Branch::kRandomMove;
  }

  Domain domain(const TaskRef& task) const {
    const auto& r = timeline_->rounds[task.round];
    switch (branch(task.round)) {
      case Branch::kPhaseEnd:
        return Domain::forced(r.cheapest);
      case Branch::kStay:
        return Domain::forced(current_);
      case Branch::kRandomMove:
        break;
    }
    std::vector<StateId> open;
    for (StateId j = 0; j < r.saturated_after.size(); ++j) {
      if (!r.saturated_after[j]) open.push_back(j);
    }
    return Domain(std::move(open));
  }

  StateId decide(const TaskRef& task, const Domain&, StateId buffer) const {
    const auto& r = timeline_->rounds[task.round];
    switch (branch(task.round)) {
      case Branch::kPhaseEnd:
        return r.cheapest;
      case Branch::kStay:
        return current_;
      case Branch::kRandomMove:
        break;
    }
    if (buffer >= r.saturated_after.size() || r.saturated_after[buffer]) {
      throw ContractViolation("UnifMTS: buffer state " + std::to_string(buffer) +
                              " is saturated at the end of the round");
    }
    return buffer;
  }

  double commit(const TaskRef& task, const Domain&, StateId next) {
    const Rational cost = move_cost(current_, next, task.costs);
    exact_cost_ += cost;
    current_ = next;
    return to_double(cost);
  }

  StateId state() const noexcept { return current_; }
  const Rational& exact_cost() const noexcept { return exact_cost_; }
  const PhaseTimeline& timeline() const noexcept { return *timeline_; }

 private:
  std::shared_ptr<const PhaseTimeline> timeline_;
  StateId current_;
  Rational exact_cost_ = 0;
};

// Instant at which state j saturates in the phase open at `ledger`, following
// the tasks from `round` on; unset if it never does within the instance.
inline std::optional<Rational> forward_saturation_time(const MtsInstance& inst,
                                                       const SaturationLedger& ledger,
                                                       std::size_t round, StateId j) {
  Rational acc = ledger.accumulated[j];
  if (acc >= 1) return ledger.now;
  for (std::size_t l = round; l < inst.size(); ++l) {
    const Rational& r = inst.tasks[l][j];
    const Rational need = 1 - acc;
    if (r >= need) return Rational(l) + need / r;
    acc += r;
  }
  return std::nullopt;
}

// Among `candidates`, the state that saturates last in the current phase.
// Never saturating ranks last of all; ties go to the smallest index.
inline StateId lts_advice(const MtsInstance& inst, const SaturationLedger& ledger,
                          std::size_t round, std::span<const StateId> candidates) {
  StateId best = candidates.front();
  std::optional<Rational> best_time = forward_saturation_time(inst, ledger, round, best);
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    if (!best_time) break;
    const StateId j = candidates[c];
    auto t = forward_saturation_time(inst, ledger, round, j);
    if (!t || *t > *best_time) {
      best = j;
      best_time = std::move(t);
    }
  }
  return best;
}

inline StateId lts_advice(const MtsInstance& inst, const SaturationLedger& ledger,
                          std::size_t round) {
  std::vector<StateId> all(inst.n);
  for (StateId j = 0; j < inst.n; ++j) all[j] = j;
  return lts_advice(inst, ledger, round, all);
}

class LtsOracle {
 public:
  StateId advise(const MtsInstance& inst, std::size_t round, const UnifMts& alg,
                 const UnifMts::Domain& domain, Rng&) const {
    if (domain.is_forced()) return domain.candidates().front();
    return lts_advice(inst, alg.timeline().before[round], round, domain.candidates());
  }
};

}  // namespace ria::mts
