#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "ria/core/random.hpp"
#include "ria/setcover/instance.hpp"

namespace ria::setcover {

// Each set takes each element with probability `density`; uncovered elements
// join a random set and empty sets get a random element. Arrivals are drawn
// uniformly with replacement.
inline SetCoverInstance random_set_cover_instance(std::size_t n, std::size_t m, std::size_t length,
                                                  std::uint64_t seed, double density = 0.2) {
  if (n < 1 || m < 1) throw std::invalid_argument("random set cover needs n, m >= 1");
  SetCoverInstance inst;
  inst.n = n;
  inst.name = "sc-random-n" + std::to_string(n) + "-m" + std::to_string(m) + "-len" +
              std::to_string(length) + "-seed" + std::to_string(seed);
  Rng rng{seed};
  std::uniform_int_distribution<std::size_t> pick_set(0, m - 1);
  std::uniform_int_distribution<Element> pick_element(1, static_cast<Element>(n));

  std::vector<std::vector<char>> member(m, std::vector<char>(n + 1, 0));
  for (auto& row : member) {
    for (Element e = 1; e <= n; ++e) row[e] = bernoulli(rng, density) ? 1 : 0;
  }
  for (Element e = 1; e <= n; ++e) {
    bool any = false;
    for (const auto& row : member) any = any || row[e];
    if (!any) member[pick_set(rng)][e] = 1;
  }
  inst.family.resize(m);
  for (std::size_t s = 0; s < m; ++s) {
    for (Element e = 1; e <= n; ++e) {
      if (member[s][e]) inst.family[s].push_back(e);
    }
    if (inst.family[s].empty()) inst.family[s].push_back(pick_element(rng));
  }
  inst.sequence.reserve(length);
  for (std::size_t i = 0; i < length; ++i) inst.sequence.push_back(pick_element(rng));
  return inst;
}

}  // namespace ria::setcover
