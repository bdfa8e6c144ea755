#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace ria::stats {

struct Summary {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

// Mean and standard error of the mean (sample standard deviation / sqrt(n)).
// Summation runs in index order so the result is independent of how the
// values were produced.
inline Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    const double var = sq / static_cast<double>(values.size() - 1);
    s.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  return s;
}

// Pearson goodness-of-fit against the uniform distribution over the buckets.
struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

inline ChiSquare chi_square_uniform(std::span<const std::size_t> counts) {
  ChiSquare r;
  if (counts.size() < 2) return r;
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  if (total == 0.0) return r;
  const double expected = total / static_cast<double>(counts.size());
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    r.statistic += d * d / expected;
  }
  r.dof = counts.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

// Several independent goodness-of-fit tests pooled into one: statistics
// and degrees of freedom add.
inline ChiSquare chi_square_pooled(std::span<const ChiSquare> parts) {
  ChiSquare r;
  for (const auto& p : parts) {
    r.statistic += p.statistic;
    r.dof += p.dof;
  }
  if (r.dof == 0) return r;
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

// Half-width of the k-sigma band of a binomial proportion.
inline double binomial_band(double p, std::size_t n, double k_sigma = 3.0) {
  return k_sigma * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace ria::stats
