#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ria/core/random.hpp"

namespace ria {

// Probability that a round's randomness buffer is replaced by the oracle's
// advice. 0 is plain randomized online computation, 1 is perfect advice.
class InfusionParameter {
 public:
  explicit InfusionParameter(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("infusion parameter must lie in [0, 1], got " +
                                  std::to_string(alpha));
    }
  }
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

enum class BufferSource { kRandom, kInfused };

// One round's decision buffer. The engine hands it to the algorithm for the
// current round only.
template <class Decision>
struct RoundBuffer {
  Decision content;
  BufferSource source = BufferSource::kRandom;

  bool infused() const noexcept { return source == BufferSource::kInfused; }
};

// Uniform choice over a finite candidate list. A single candidate is a forced
// decision: sampling it consumes no randomness and the oracle is not asked.
template <class T>
class UniformChoice {
 public:
  using value_type = T;

  UniformChoice() = default;
  explicit UniformChoice(std::vector<T> candidates) : candidates_(std::move(candidates)) {}

  static UniformChoice forced(T only) { return UniformChoice(std::vector<T>{std::move(only)}); }

  bool empty() const noexcept { return candidates_.empty(); }
  bool is_forced() const noexcept { return candidates_.size() == 1; }
  std::size_t size() const noexcept { return candidates_.size(); }
  const std::vector<T>& candidates() const noexcept { return candidates_; }

  bool contains(const T& value) const {
    return std::find(candidates_.begin(), candidates_.end(), value) != candidates_.end();
  }

  T sample(Rng& rng) const {
    if (candidates_.size() == 1) return candidates_.front();
    std::uniform_int_distribution<std::size_t> pick(0, candidates_.size() - 1);
    return candidates_[pick(rng)];
  }

 private:
  std::vector<T> candidates_;
};

}  // namespace ria
