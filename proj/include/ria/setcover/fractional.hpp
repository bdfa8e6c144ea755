#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "ria/setcover/instance.hpp"

namespace ria::setcover {

inline double coverage(const std::vector<double>& x, const std::vector<SetId>& covering) {
  double sum = 0.0;
  for (SetId s : covering) sum += x[s];
  return sum;
}

// Sums such as 3 * (1/3) land just below 1 in floating point.
inline constexpr double kCoverSlack = 1e-9;

inline bool fractionally_covers(const std::vector<double>& x, const std::vector<SetId>& covering) {
  return coverage(x, covering) >= 1.0 - kCoverSlack;
}

// Doubling update for the arriving element: if its constraint is violated,
// every S in F(e) moves to 2 x_S + 1/|F(e)|. Returns whether it fired.
inline bool fractional_update(std::vector<double>& x, Element e, const SetSystem& sys) {
  const auto& fe = sys.covering(e);
  if (fractionally_covers(x, fe)) return false;
  const double add = 1.0 / static_cast<double>(fe.size());
  for (SetId s : fe) x[s] = 2.0 * x[s] + add;
  return true;
}

// The fractional algorithm run alone over a whole instance.
inline std::vector<double> fractional_solution(const SetCoverInstance& inst) {
  const auto sys = SetSystem::build(inst);
  std::vector<double> x(sys->sets(), 0.0);
  for (Element e : inst.sequence) fractional_update(x, e, *sys);
  return x;
}

inline double fractional_cost(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

}  // namespace ria::setcover
