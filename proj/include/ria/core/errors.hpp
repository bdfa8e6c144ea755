#pragma once

#include <stdexcept>
#include <string>

namespace ria {

// A decision buffer that the algorithm's declared domain does not admit.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised by exact offline solvers that give up within their search budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ria
