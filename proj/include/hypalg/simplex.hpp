#pragma once

// Exact rational simplex: maximize c.y subject to A y <= b, y >= 0.
// Two-phase tableau method; Bland's rule in both phases, so it terminates
// on degenerate problems.

#include <cstddef>
#include <optional>
#include <vector>

#include "hypalg/error.hpp"
#include "hypalg/field.hpp"

namespace hypalg {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                 // optimum when kOptimal
  std::vector<Rational> solution; // an optimal y when kOptimal
};

class SimplexTableau {
 public:
  SimplexTableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                 const std::vector<Rational>& c)
      : m_(b.size()), n_(c.size()), cols_(n_ + m_ + 1), artificial_(n_ + m_) {
    if (a.size() != m_) throw DomainError("LP: A and b disagree on row count");
    rows_.assign(m_, std::vector<Rational>(cols_));
    rhs_ = b;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw DomainError("LP: A and c disagree on column count");
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][artificial_] = -1;
      basis_[i] = n_ + i;
    }
    cost_ = c;
  }

  LpResult solve() {
    if (!phase_one()) return {LpStatus::kInfeasible, 0, {}};
    // Phase two: restore the real objective in terms of the nonbasic columns.
    objective_.assign(cols_, Rational(0));
    value_ = 0;
    for (std::size_t j = 0; j < n_; ++j) objective_[j] = cost_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t v = basis_[i];
      if (v < n_ && objective_[v] != 0) {
        const Rational coeff = objective_[v];
        for (std::size_t j = 0; j < cols_; ++j) objective_[j] -= coeff * rows_[i][j];
        value_ += coeff * rhs_[i];
      }
    }
    if (!run_bland()) return {LpStatus::kUnbounded, 0, {}};
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) y[basis_[i]] = rhs_[i];
    }
    return {LpStatus::kOptimal, value_, std::move(y)};
  }

 private:
  // Tableau rows read: x_{basis[i]} + sum_j rows[i][j] x_j = rhs[i] over
  // nonbasic j; objective z = value + sum_j objective[j] x_j.
  void pivot(std::size_t r, std::size_t e) {
    const Rational lead = rows_[r][e];
    for (auto& x : rows_[r]) x /= lead;
    rhs_[r] /= lead;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][e] == 0) continue;
      const Rational f = rows_[i][e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (objective_[e] != 0) {
      const Rational f = objective_[e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[r][j] != 0) objective_[j] -= f * rows_[r][j];
      }
      value_ += f * rhs_[r];
    }
    basis_[r] = e;
  }

  // Returns false on unboundedness.
  bool run_bland() {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == artificial_ && artificial_retired_) continue;
        if (objective_[j] > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][e] <= 0) continue;
        const Rational ratio = rhs_[i] / rows_[i][e];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, e);
    }
  }

  bool phase_one() {
    std::size_t most_negative = m_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs_[i] < 0 && (most_negative == m_ || rhs_[i] < rhs_[most_negative])) {
        most_negative = i;
      }
    }
    objective_.assign(cols_, Rational(0));
    value_ = 0;
    if (most_negative == m_) {
      retire_artificial();
      return true;
    }
    // Maximize -x0; the first pivot brings x0 in and makes every rhs >= 0.
    objective_[artificial_] = -1;
    pivot(most_negative, artificial_);
    if (!run_bland()) throw InternalError("LP phase one is bounded by construction");
    if (value_ < 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != artificial_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != artificial_ && rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row that only mentions x0 is redundant; x0 stays basic at zero.
    }
    retire_artificial();
    return true;
  }

  void retire_artificial() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != artificial_) rows_[i][artificial_] = 0;
    }
    artificial_retired_ = true;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t cols_;
  std::size_t artificial_;
  bool artificial_retired_ = false;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> objective_;
  Rational value_;
};

/// maximize c.y subject to A y <= b, y >= 0, exactly over Q.
inline LpResult solve_lp(const std::vector<std::vector<Rational>>& a,
                         const std::vector<Rational>& b, const std::vector<Rational>& c) {
  return SimplexTableau(a, b, c).solve();
}

}  // namespace hypalg
