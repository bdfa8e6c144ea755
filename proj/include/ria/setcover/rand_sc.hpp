#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/core/random.hpp"
#include "ria/setcover/exact.hpp"
#include "ria/setcover/fractional.hpp"
#include "ria/setcover/instance.hpp"
#include "ria/setcover/rounding.hpp"

namespace ria::setcover {

// When a round runs the fractional update and the rounding.
enum class Gate {
  // Only if e is covered neither fractionally nor integrally. x then depends
  // on earlier coins through the integral solution.
  kLazy,
  // Whenever e is fractionally uncovered. x is a function of the request
  // prefix alone and the rounding probabilities are deterministic, which
  // makes marginal_inclusion exact.
  kFractional,
};

struct RandScOptions {
  double c = 3.0;
  bool las_vegas = true;
  Gate gate = Gate::kLazy;
};

struct ScAnswer {
  Selection rounded;            // sets picked by the rounding
  std::optional<SetId> patch;   // set added because e stayed uncovered

  bool operator==(const ScAnswer&) const = default;
};

// Fractional primal-dual algorithm with per-round independent rounding. The
// randomness buffer of a rounding round is the selection vector over F(e).
class RandSc {
 public:
  using Request = ElementRef;
  using Decision = Selection;
  using Domain = IndependentSelection;
  using Answer = ScAnswer;

  explicit RandSc(const SetCoverInstance& inst, RandScOptions opts = {})
      : RandSc(SetSystem::build(inst), opts) {}
  explicit RandSc(std::shared_ptr<const SetSystem> sys, RandScOptions opts = {})
      : sys_(std::move(sys)),
        opts_(opts),
        x_(sys_->sets(), 0.0),
        selected_(sys_->sets(), 0),
        rounded_(sys_->sets(), 0),
        log_(sys_->sets()) {}

  bool covered(Element e) const {
    for (SetId s : sys_->covering(e)) {
      if (selected_[s]) return true;
    }
    return false;
  }

  bool fractionally_covered(Element e) const { return fractionally_covers(x_, sys_->covering(e)); }

  bool rounding_round(Element e) const {
    if (fractionally_covered(e)) return false;
    return opts_.gate == Gate::kFractional || !covered(e);
  }

  Domain domain(const ElementRef& r) const {
    if (!rounding_round(r.element)) return Domain::none();
    const auto& fe = sys_->covering(r.element);
    std::vector<double> probs;
    probs.reserve(fe.size());
    for (SetId s : fe) {
      probs.push_back(selection_probability(x_[s], fe.size(), sys_->universe(), opts_.c));
    }
    return Domain(fe, std::move(probs));
  }

  Answer decide(const ElementRef& r, const Domain& dom, const Selection& buffer) const {
    if (!dom.contains(buffer)) {
      throw ContractViolation("RandSC: buffer is not a sorted subset of F(e)");
    }
    Answer a;
    a.rounded = buffer;
    if (opts_.las_vegas && buffer.empty() && !covered(r.element)) {
      a.patch = sys_->covering(r.element).front();
    }
    return a;
  }

  double commit(const ElementRef& r, const Domain& dom, const Answer& a) {
    if (dom.active()) {
      log_.record(r.round, dom);
      fractional_update(x_, r.element, *sys_);
    }
    std::size_t bought = 0;
    for (SetId s : a.rounded) {
      rounded_[s] = 1;
      bought += buy(s);
    }
    if (a.patch) {
      ++patches_;
      bought += buy(*a.patch);
    }
    return static_cast<double>(bought);
  }

  const SetSystem& system() const noexcept { return *sys_; }
  const RandScOptions& options() const noexcept { return opts_; }
  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<char>& selected() const noexcept { return selected_; }
  // Sets the rounding has picked at least once, patches excluded.
  const std::vector<char>& rounded() const noexcept { return rounded_; }
  const SelectionLog& log() const noexcept { return log_; }
  std::size_t selected_count() const noexcept { return count_; }
  std::size_t patches() const noexcept { return patches_; }

 private:
  std::size_t buy(SetId s) {
    if (selected_[s]) return 0;
    selected_[s] = 1;
    ++count_;
    return 1;
  }

  std::shared_ptr<const SetSystem> sys_;
  RandScOptions opts_;
  std::vector<double> x_;
  std::vector<char> selected_;
  std::vector<char> rounded_;
  SelectionLog log_;
  std::size_t count_ = 0;
  std::size_t patches_ = 0;
};

// Advice for one rounding round: sets of the optimal cover surely, every
// other set of F(e) independently with its own probability.
inline Selection boost_advice(const std::vector<char>& in_cover, const IndependentSelection& dom,
                              Rng& rng) {
  Selection out;
  for (std::size_t i = 0; i < dom.sets().size(); ++i) {
    const SetId s = dom.sets()[i];
    const double p = dom.probabilities()[i];
    if (in_cover[s] || p >= 1.0 || (p > 0.0 && bernoulli(rng, p))) out.push_back(s);
  }
  return out;
}

class BoostOracle {
 public:
  // A* is the lexicographically smallest optimal cover of the arrived elements.
  explicit BoostOracle(const SetCoverInstance& inst, std::size_t node_budget = kDefaultNodeBudget)
      : BoostOracle(inst.sets(), exact_opt(inst, node_budget).sets) {}
  BoostOracle(std::size_t sets, const std::vector<SetId>& cover)
      : in_cover_(std::make_shared<std::vector<char>>(sets, 0)) {
    for (SetId s : cover) (*in_cover_)[s] = 1;
  }

  Selection advise(const SetCoverInstance&, std::size_t, const RandSc&,
                   const IndependentSelection& dom, Rng& rng) const {
    return boost_advice(*in_cover_, dom, rng);
  }

  const std::vector<char>& cover() const noexcept { return *in_cover_; }

 private:
  std::shared_ptr<std::vector<char>> in_cover_;
};

}  // namespace ria::setcover
