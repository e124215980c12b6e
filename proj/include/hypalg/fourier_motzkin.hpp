#pragma once

// Fourier-Motzkin elimination for mixed strict / non-strict linear systems
// over Q. Exponential in the number of variables; intended as an
// independent cross-check of the simplex route in low dimension.

#include <cstddef>
#include <vector>

#include "hypalg/error.hpp"
#include "hypalg/field.hpp"

namespace hypalg {

/// coeffs . x > rhs (strict) or coeffs . x >= rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = true;
};

/// Whether the system has a real (equivalently rational) solution.
inline bool fourier_motzkin_feasible(std::vector<LinearConstraint> system, std::size_t vars) {
  for (const auto& row : system) {
    if (row.coeffs.size() != vars) throw DomainError("constraint width mismatch");
  }
  for (std::size_t v = vars; v-- > 0;) {
    std::vector<LinearConstraint> lower, upper, next;
    for (auto& row : system) {
      if (row.coeffs[v] > 0) {
        lower.push_back(std::move(row));
      } else if (row.coeffs[v] < 0) {
        upper.push_back(std::move(row));
      } else {
        next.push_back(std::move(row));
      }
    }
    // a x_v + r.x' ⊳ β (a > 0) and -c x_v + s.x' ⊳ γ (c > 0) combine into
    // c r.x' + a s.x' ⊳ c β + a γ, strict if either input is.
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rational a = lo.coeffs[v];
        const Rational c = -up.coeffs[v];
        LinearConstraint row{std::vector<Rational>(vars), c * lo.rhs + a * up.rhs,
                             lo.strict || up.strict};
        for (std::size_t j = 0; j < v; ++j) row.coeffs[j] = c * lo.coeffs[j] + a * up.coeffs[j];
        next.push_back(std::move(row));
      }
    }
    system = std::move(next);
  }
  for (const auto& row : system) {
    if (row.strict ? !(row.rhs < 0) : !(row.rhs <= 0)) return false;
  }
  return true;
}

}  // namespace hypalg
