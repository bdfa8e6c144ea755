#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "ria/core/experiment.hpp"

namespace ria::harness {

// Shortest representation that reads back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

enum class RowStatus { kOk, kOptZero, kBudgetExceeded, kError };

inline const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::kOk:
      return "ok";
    case RowStatus::kOptZero:
      return "opt_zero";
    case RowStatus::kBudgetExceeded:
      return "budget_exceeded";
    case RowStatus::kError:
      return "error";
  }
  return "error";
}

struct ResultRow {
  ExperimentResult result;
  RowStatus status = RowStatus::kOk;
  std::string message;  // failure reason, not written to the CSV
};

inline constexpr const char* kResultHeader =
    "problem,instance,alpha,trials,mean_cost,opt_cost,ratio,stderr,seed,status";

// Fields that could not be computed are left empty.
inline void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << kResultHeader << '\n';
  for (const auto& row : rows) {
    const auto& r = row.result;
    const bool numbers = row.status == RowStatus::kOk || row.status == RowStatus::kOptZero;
    os << r.problem << ',' << r.instance << ',' << format_double(r.alpha) << ',' << r.trials << ',';
    if (numbers) {
      os << format_double(r.mean_cost) << ',' << format_double(r.opt_cost) << ','
         << (r.ratio ? format_double(*r.ratio) : std::string()) << ',' << format_double(r.std_error);
    } else {
      os << ",,,";
    }
    os << ',' << r.master_seed << ',' << status_name(row.status) << '\n';
  }
}

}  // namespace ria::harness
