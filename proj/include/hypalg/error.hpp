#pragma once

#include <stdexcept>
#include <string>

namespace hypalg {

/// Invalid argument or input outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an input exceeds one of the desk-scale budgets.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A computed object violated a proven property (e.g. a nonsingular
/// intersection matrix without a perfect matching). Never a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Budgets for the exponential scans. Defaults match the CLI defaults.
struct Budget {
  int max_dimension = 30;        // n for point sets
  int max_hyperplanes = 24;      // m for cell enumeration
  int max_profile_hyperplanes = 16;
  int oracle_log2 = 20;          // log2 of candidate polynomials
  int column_log2 = 20;          // log2 of evaluation-matrix columns
  int max_family_search = 20;    // |D| for intersecting-family search
};

}  // namespace hypalg
