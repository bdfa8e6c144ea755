#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "ria/core/random.hpp"
#include "ria/mts/instance.hpp"

namespace ria::mts {

// Tasks with independent costs drawn from {0, 1/q, ..., max_units/q}; a
// fraction `zero_share` of the entries is forced to 0 so states stay cheap
// for a while.
inline MtsInstance random_mts_instance(std::size_t n, std::size_t length, std::uint64_t seed,
                                       unsigned max_units = 60, unsigned q = 100,
                                       double zero_share = 0.3) {
  MtsInstance inst;
  inst.n = n;
  inst.name = "mts-random-n" + std::to_string(n) + "-len" + std::to_string(length) + "-seed" +
              std::to_string(seed);
  Rng rng{seed};
  std::uniform_int_distribution<unsigned> units(0, max_units);
  inst.tasks.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Rational> task(n);
    for (auto& c : task) c = uniform01(rng) < zero_share ? Rational(0) : Rational(units(rng), q);
    inst.tasks.push_back(std::move(task));
  }
  return inst;
}

}  // namespace ria::mts
