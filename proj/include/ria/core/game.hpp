#pragma once

// Request-answer games with randomly infused advice.
//
// An online algorithm is split into three calls per round:
//
//   domain(request)                 -> the decision domain of this round
//   decide(request, domain, buffer) -> the answer (const: cannot retain buffer)
//   commit(request, domain, answer) -> applies the answer, returns its cost
//
// State only ever advances through commit, which never sees the buffer, so the
// answer of round i is a function of the request prefix, the answer prefix and
// buffer i alone. Past buffers are unreachable by construction.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ria/core/errors.hpp"
#include "ria/core/infusion.hpp"
#include "ria/core/random.hpp"

namespace ria {

template <class D>
concept DecisionDomain = requires(const D& d, Rng& rng) {
  typename D::value_type;
  { d.empty() } -> std::convertible_to<bool>;
  { d.is_forced() } -> std::convertible_to<bool>;
  { d.sample(rng) } -> std::convertible_to<typename D::value_type>;
};

template <class I>
concept RequestSequence = requires(const I& inst, std::size_t i) {
  { inst.size() } -> std::convertible_to<std::size_t>;
  inst.request(i);
};

template <class A>
concept OnlineAlgorithm =
    std::copy_constructible<A> &&
    requires {
      typename A::Request;
      typename A::Decision;
      typename A::Domain;
      typename A::Answer;
    } &&
    DecisionDomain<typename A::Domain> &&
    std::same_as<typename A::Domain::value_type, typename A::Decision> &&
    requires(A& a, const A& ca, const typename A::Request& r, const typename A::Domain& dom,
             const typename A::Decision& b, const typename A::Answer& ans) {
      { ca.domain(r) } -> std::same_as<typename A::Domain>;
      { ca.decide(r, dom, b) } -> std::same_as<typename A::Answer>;
      { a.commit(r, dom, ans) } -> std::convertible_to<double>;
    };

// What an oracle gets to see of the algorithm: its committed state, which is a
// deterministic function of the requests and answers so far.
template <class A>
const A& algorithm_view(const A& alg) noexcept {
  return alg;
}

template <class O, class A, class I>
concept AdviceOracle = requires(O& o, const I& inst, std::size_t round, const A& alg,
                                const typename A::Domain& dom, Rng& rng) {
  { o.advise(inst, round, algorithm_view(alg), dom, rng) } -> std::convertible_to<typename A::Decision>;
};

template <class Request, class Decision, class Answer>
struct RoundRecord {
  Request request;
  RoundBuffer<Decision> buffer;
  Answer answer;
  double cost_increment = 0.0;

  bool infused() const noexcept { return buffer.infused(); }
};

template <class Request, class Decision, class Answer>
struct GameTrace {
  std::vector<RoundRecord<Request, Decision, Answer>> rounds;
  double total_cost = 0.0;

  std::size_t size() const noexcept { return rounds.size(); }
  std::size_t infused_count() const noexcept {
    std::size_t c = 0;
    for (const auto& r : rounds) c += r.infused() ? 1 : 0;
    return c;
  }
};

template <OnlineAlgorithm A>
using TraceOf = GameTrace<typename A::Request, typename A::Decision, typename A::Answer>;

struct NullObserver {
  template <class... Args>
  void operator()(Args&&...) const noexcept {}
};

// Plays one game in place on `alg`. Every round draws the infusion coin from
// its own stream, so the infused pattern depends only on (seed, alpha), never
// on how much randomness the algorithm or oracle consume. The observer is
// called as observe(round, request, buffer, answer, cost, alg) after commit.
template <OnlineAlgorithm Alg, class Oracle, RequestSequence Inst, class Observer = NullObserver>
  requires AdviceOracle<Oracle, Alg, Inst>
double play(Alg& alg, Oracle& oracle, const Inst& inst, InfusionParameter alpha,
            std::uint64_t seed, Observer&& observe = {}) {
  Rng coin = make_rng(seed, Stream::kInfusion);
  Rng fresh = make_rng(seed, Stream::kBuffer);
  Rng oracle_rng = make_rng(seed, Stream::kOracle);
  const double p = alpha.value();

  double total = 0.0;
  const std::size_t rounds = inst.size();
  for (std::size_t i = 0; i < rounds; ++i) {
    const typename Alg::Request request = inst.request(i);
    const typename Alg::Domain domain = alg.domain(request);
    if (domain.empty()) {
      throw std::invalid_argument("empty decision domain in round " + std::to_string(i));
    }
    const bool infused = bernoulli(coin, p);
    RoundBuffer<typename Alg::Decision> buffer{
        domain.is_forced() || !infused ? domain.sample(fresh)
                                       : typename Alg::Decision(oracle.advise(
                                             inst, i, algorithm_view(alg), domain, oracle_rng)),
        infused ? BufferSource::kInfused : BufferSource::kRandom};
    const typename Alg::Answer answer = alg.decide(request, domain, buffer.content);
    const double cost = static_cast<double>(alg.commit(request, domain, answer));
    total += cost;
    observe(i, request, buffer, answer, cost, std::as_const(alg));
  }
  return total;
}

// Runs one game on a fresh copy of `alg` and records every round.
template <OnlineAlgorithm Alg, class Oracle, RequestSequence Inst>
  requires AdviceOracle<Oracle, Alg, Inst>
TraceOf<Alg> run_game(Alg alg, Oracle oracle, const Inst& inst, InfusionParameter alpha,
                      std::uint64_t seed) {
  TraceOf<Alg> trace;
  trace.rounds.reserve(inst.size());
  play(alg, oracle, inst, alpha, seed,
       [&](std::size_t, const auto& request, const auto& buffer, const auto& answer, double cost,
           const Alg&) {
         trace.rounds.push_back({request, buffer, answer, cost});
         trace.total_cost += cost;
       });
  return trace;
}

// Wrapper that additionally checks, every round, that decide() is a pure
// function of its visible inputs by evaluating it twice.
template <OnlineAlgorithm Alg>
  requires std::equality_comparable<typename Alg::Answer>
class RandomnessOblivious {
 public:
  using Request = typename Alg::Request;
  using Decision = typename Alg::Decision;
  using Domain = typename Alg::Domain;
  using Answer = typename Alg::Answer;

  explicit RandomnessOblivious(Alg inner) : inner_(std::move(inner)) {}

  Domain domain(const Request& r) const { return inner_.domain(r); }

  Answer decide(const Request& r, const Domain& dom, const Decision& buffer) const {
    Answer first = inner_.decide(r, dom, buffer);
    if (!(inner_.decide(r, dom, buffer) == first)) {
      throw ContractViolation("decide() is not a function of its visible inputs");
    }
    return first;
  }

  double commit(const Request& r, const Domain& dom, const Answer& a) {
    return static_cast<double>(inner_.commit(r, dom, a));
  }

  const Alg& inner() const noexcept { return inner_; }

 private:
  Alg inner_;
};

template <class Alg>
const Alg& algorithm_view(const RandomnessOblivious<Alg>& wrapped) noexcept {
  return wrapped.inner();
}

template <OnlineAlgorithm Alg>
RandomnessOblivious<Alg> enforce_randomness_oblivious(Alg alg) {
  return RandomnessOblivious<Alg>(std::move(alg));
}

// Rebuilds the algorithm state of round `round` purely from the recorded
// answers of earlier rounds (their buffers are never consulted), then decides
// round `round` from `buffer`.
template <OnlineAlgorithm Alg, RequestSequence Inst>
typename Alg::Answer replay_decision(Alg alg, const Inst& inst, const TraceOf<Alg>& trace,
                                     std::size_t round, const typename Alg::Decision& buffer) {
  for (std::size_t i = 0; i < round; ++i) {
    const typename Alg::Request request = inst.request(i);
    const auto domain = alg.domain(request);
    alg.commit(request, domain, trace.rounds[i].answer);
  }
  const typename Alg::Request request = inst.request(round);
  return alg.decide(request, alg.domain(request), buffer);
}

}  // namespace ria
