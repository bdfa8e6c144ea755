#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ria/harness/csv.hpp"

namespace ria::harness {

// H_k = 1 + 1/2 + ... + 1/k, summed exactly.
inline boost::multiprecision::cpp_rational harmonic_exact(std::size_t k) {
  boost::multiprecision::cpp_rational h = 0;
  for (std::size_t i = 1; i <= k; ++i) h += boost::multiprecision::cpp_rational(1, i);
  return h;
}

inline double harmonic(std::size_t k) { return harmonic_exact(k).convert_to<double>(); }

inline void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

// min{2 H_k, 2/alpha}; alpha = 0 is the 2 H_k branch.
inline double paging_bound(std::size_t k, double alpha) {
  check_alpha(alpha);
  const double no_advice = 2.0 * harmonic(k);
  return alpha == 0.0 ? no_advice : std::min(no_advice, 2.0 / alpha);
}

// min{2 H_n, 2/alpha + 2}.
inline double mts_bound(std::size_t n, double alpha) {
  check_alpha(alpha);
  const double no_advice = 2.0 * harmonic(n);
  return alpha == 0.0 ? no_advice : std::min(no_advice, 2.0 / alpha + 2.0);
}

inline constexpr double kSetCoverConstant = 3.0;

// C ln n min{1/alpha, log2 d}: the shape of the set cover bound, whose
// constant is not pinned down; C is reported next to every sample.
inline double setcover_bound(std::size_t n, std::size_t d, double alpha,
                             double constant = kSetCoverConstant) {
  check_alpha(alpha);
  const double log_d = std::log2(static_cast<double>(std::max<std::size_t>(d, 1)));
  const double factor = alpha == 0.0 ? log_d : std::min(1.0 / alpha, log_d);
  return constant * std::log(static_cast<double>(n)) * factor;
}

struct BoundSample {
  std::string problem;
  std::optional<std::size_t> k, n, d;
  double alpha = 0.0;
  double bound = 0.0;
  std::optional<double> constant;
};

struct BoundRequest {
  std::string problem;  // paging | mts | setcover
  std::optional<std::size_t> k, n, d;
  std::vector<double> alphas;
  double constant = kSetCoverConstant;
};

inline std::vector<BoundSample> bound_curve(const BoundRequest& req) {
  auto need = [&](const std::optional<std::size_t>& v, const char* name) {
    if (!v || *v < 1) {
      throw std::invalid_argument(req.problem + " bounds need --" + std::string(name) + " >= 1");
    }
    return *v;
  };
  std::vector<BoundSample> out;
  for (double a : req.alphas) {
    BoundSample s;
    s.problem = req.problem;
    s.alpha = a;
    if (req.problem == "paging") {
      s.k = need(req.k, "k");
      s.bound = paging_bound(*s.k, a);
    } else if (req.problem == "mts") {
      s.n = need(req.n, "n");
      s.bound = mts_bound(*s.n, a);
    } else if (req.problem == "setcover") {
      s.n = need(req.n, "n");
      s.d = need(req.d, "d");
      s.bound = setcover_bound(*s.n, *s.d, a, req.constant);
      s.constant = req.constant;
    } else {
      throw std::invalid_argument("unknown problem '" + req.problem + "'");
    }
    out.push_back(s);
  }
  return out;
}

inline void write_bounds_csv(std::ostream& os, const std::vector<BoundSample>& rows) {
  os << "problem,k,n,d,alpha,bound,constant\n";
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rows) {
    os << r.problem << ',' << opt(r.k) << ',' << opt(r.n) << ',' << opt(r.d) << ','
       << format_double(r.alpha) << ',' << format_double(r.bound) << ','
       << (r.constant ? format_double(*r.constant) : std::string()) << '\n';
  }
}

}  // namespace ria::harness
