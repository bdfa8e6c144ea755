#pragma once

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ria/core/errors.hpp"

namespace ria::mts {

using Rational = boost::multiprecision::cpp_rational;

// States are 0-based indices into each task vector.
using StateId = std::size_t;

// Parses "3", "0.25", "1.5e-2" or "3/7" exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return InvalidInstance("not an exact number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  boost::multiprecision::cpp_int digits = 0;
  long scale = 0;
  bool any = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    const std::string exp(text.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp, &used);
    } catch (...) {
      throw fail();
    }
    if (used != exp.size()) throw fail();
    scale += e;
  }
  Rational value(digits);
  boost::multiprecision::cpp_int ten = 10;
  if (scale > 0) value *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(scale)));
  if (scale < 0) value /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-scale)));
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// The task served in one round, viewed in place.
struct TaskRef {
  std::size_t round = 0;
  std::span<const Rational> costs;
};

// Uniform metric over n states: every move costs 1.
struct MtsInstance {
  std::size_t n = 2;
  std::vector<std::vector<Rational>> tasks;
  std::string name = "mts";

  std::size_t size() const noexcept { return tasks.size(); }
  TaskRef request(std::size_t i) const { return {i, tasks[i]}; }

  void validate() const {
    if (n < 2) throw InvalidInstance("mts: need at least 2 states");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].size() != n) {
        throw InvalidInstance("mts: task " + std::to_string(i) + " has wrong length");
      }
      for (const auto& c : tasks[i]) {
        if (c < 0) throw InvalidInstance("mts: negative processing cost in task " + std::to_string(i));
      }
    }
  }
};

inline const char* problem_name(const MtsInstance&) { return "mts"; }

// Smallest-index state of minimum cost.
inline StateId cheapest_state(std::span<const Rational> task) {
  StateId best = 0;
  for (StateId j = 1; j < task.size(); ++j) {
    if (task[j] < task[best]) best = j;
  }
  return best;
}

}  // namespace ria::mts
