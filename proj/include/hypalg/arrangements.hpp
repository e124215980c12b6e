#pragma once

// Rational hyperplane arrangements h_i = {x : <n_i, x> = b_i} in Q^k: general
// position certification, strict sign-vector feasibility, cell enumeration
// and the shattering structure of the set of cells.
//
// Feasibility of a sign vector s is the max-slack LP
//   maximize t  s.t.  s_i (<n_i, x> - b_i) >= t  for all i,  t <= 1,
// solved exactly; the open polyhedron is nonempty iff t* > 0, and its
// closure is nonempty iff t* >= 0.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/exact_linalg.hpp"
#include "hypalg/field.hpp"
#include "hypalg/fourier_motzkin.hpp"
#include "hypalg/hilbert.hpp"
#include "hypalg/simplex.hpp"

namespace hypalg {

using RationalVector = std::vector<Rational>;

class Arrangement {
 public:
  Arrangement(int k, std::vector<RationalVector> normals, RationalVector offsets)
      : k_(k), normals_(std::move(normals)), offsets_(std::move(offsets)) {
    if (k_ < 1) throw DomainError("arrangement dimension k must be >= 1");
    if (normals_.empty()) throw DomainError("arrangement needs at least one hyperplane");
    if (normals_.size() != offsets_.size()) {
      throw DomainError("arrangement has " + std::to_string(normals_.size()) + " normals but " +
                        std::to_string(offsets_.size()) + " offsets");
    }
    for (const auto& n : normals_) {
      if (n.size() != static_cast<std::size_t>(k_)) {
        throw DomainError("normal vector length differs from k=" + std::to_string(k_));
      }
      if (std::all_of(n.begin(), n.end(), [](const Rational& v) { return v == 0; })) {
        throw DomainError("hyperplane normal must be nonzero");
      }
    }
  }

  int dimension() const { return k_; }
  std::size_t size() const { return normals_.size(); }
  const std::vector<RationalVector>& normals() const { return normals_; }
  const RationalVector& offsets() const { return offsets_; }

  /// <n_i, x> - b_i
  Rational evaluate(std::size_t i, std::span<const Rational> x) const {
    Rational acc = -offsets_[i];
    for (std::size_t j = 0; j < x.size(); ++j) acc += normals_[i][j] * x[j];
    return acc;
  }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int k_;
  std::vector<RationalVector> normals_;
  RationalVector offsets_;
};

/// An orientation in {-1,+1}^m, printed as a string over {+,-}.
class SignVector {
 public:
  explicit SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_) {
      if (s != 1 && s != -1) throw DomainError("sign vector entries must be +1 or -1");
    }
  }

  static SignVector parse(const std::string& text) {
    std::vector<int> signs;
    for (char ch : text) {
      if (ch == '+') {
        signs.push_back(1);
      } else if (ch == '-') {
        signs.push_back(-1);
      } else {
        throw DomainError("sign string may only contain '+' and '-', got '" + text + "'");
      }
    }
    return SignVector(std::move(signs));
  }

  /// Relabels +1 -> 1, -1 -> 0: coordinate i of the point is sign i.
  static SignVector from_point(Point p, std::size_t m) {
    std::vector<int> signs(m);
    for (std::size_t i = 0; i < m; ++i) signs[i] = ((p >> i) & 1U) ? 1 : -1;
    return SignVector(std::move(signs));
  }

  Point to_point() const {
    Point p = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
      if (signs_[i] == 1) p |= Point{1} << i;
    }
    return p;
  }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const int> signs() const { return signs_; }

  std::string to_string() const {
    std::string out;
    for (int s : signs_) out += s == 1 ? '+' : '-';
    return out;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend bool operator<(const SignVector& a, const SignVector& b) {
    return a.to_string() < b.to_string();
  }

 private:
  std::vector<int> signs_;
};

/// The feasible sign vectors S_H of an arrangement, sorted as strings.
struct CellSet {
  Arrangement arrangement;
  std::vector<SignVector> feasible;

  std::size_t size() const { return feasible.size(); }

  /// S_H as a subset of {0,1}^m under +1 -> 1, -1 -> 0.
  PointSet as_point_set() const {
    std::vector<Point> pts;
    pts.reserve(feasible.size());
    for (const auto& s : feasible) pts.push_back(s.to_point());
    return PointSet(static_cast<int>(arrangement.size()), std::move(pts));
  }
};

namespace detail {

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  std::size_t pos = k;
  while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
  if (pos == 0) return false;
  ++idx[pos - 1];
  for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  return true;
}

inline std::size_t rank_of_rows(const Arrangement& h, const std::vector<std::size_t>& rows,
                                bool augmented) {
  const std::size_t k = static_cast<std::size_t>(h.dimension());
  Matrix<RationalField> m(RationalField{}, rows.size(), k + (augmented ? 1 : 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) m.at(r, j) = h.normals()[rows[r]][j];
    if (augmented) m.at(r, k) = h.offsets()[rows[r]];
  }
  return rank(m);
}

}  // namespace detail

/// Every j <= k hyperplanes meet in a (k-j)-flat and every k+1 have empty
/// intersection. Independence of all min(m, k)-subsets of normals covers
/// every smaller subset; full row rank also makes each such system consistent.
inline bool is_general_position(const Arrangement& h) {
  const std::size_t m = h.size();
  const std::size_t k = static_cast<std::size_t>(h.dimension());
  const std::size_t j = std::min(m, k);
  auto idx = detail::first_combination(j);
  do {
    if (detail::rank_of_rows(h, idx, false) != j) return false;
  } while (detail::next_combination(idx, m));
  if (m > k) {
    idx = detail::first_combination(k + 1);
    do {
      if (detail::rank_of_rows(h, idx, true) != k + 1) return false;
    } while (detail::next_combination(idx, m));
  }
  return true;
}

/// Optimum of the max-slack LP over the first `signs.size()` hyperplanes.
struct SlackSolution {
  Rational slack;
  RationalVector point;
};

inline SlackSolution max_slack(const Arrangement& h, std::span<const int> signs) {
  if (signs.size() > h.size()) throw DomainError("more signs than hyperplanes");
  const std::size_t k = static_cast<std::size_t>(h.dimension());
  // Variables: x+ (k), x- (k), t+, t-; all nonnegative.
  const std::size_t vars = 2 * k + 2;
  std::vector<RationalVector> a;
  RationalVector b;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    // -s_i <n_i, x> + t <= -s_i b_i
    RationalVector row(vars);
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = -signs[i] * h.normals()[i][j];
      row[k + j] = signs[i] * h.normals()[i][j];
    }
    row[2 * k] = 1;
    row[2 * k + 1] = -1;
    a.push_back(std::move(row));
    b.push_back(-signs[i] * h.offsets()[i]);
  }
  RationalVector cap(vars);
  cap[2 * k] = 1;
  cap[2 * k + 1] = -1;
  a.push_back(std::move(cap));
  b.emplace_back(1);
  RationalVector c(vars);
  c[2 * k] = 1;
  c[2 * k + 1] = -1;
  auto result = solve_lp(a, b, c);
  if (result.status != LpStatus::kOptimal) {
    throw InternalError("max-slack LP is feasible and bounded by construction");
  }
  RationalVector x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = result.solution[j] - result.solution[k + j];
  return {result.value, std::move(x)};
}

namespace detail {
inline void check_length(const Arrangement& h, const SignVector& s) {
  if (s.size() != h.size()) {
    throw DomainError("sign vector has length " + std::to_string(s.size()) + ", expected m=" +
                      std::to_string(h.size()));
  }
}
}  // namespace detail

/// The open polyhedron {x : s_i (<n_i, x> - b_i) > 0} is nonempty.
inline bool is_feasible(const Arrangement& h, const SignVector& s) {
  detail::check_length(h, s);
  return max_slack(h, s.signs()).slack > 0;
}

/// The closed relaxation {x : s_i (<n_i, x> - b_i) >= 0} over a prefix of s.
inline bool is_closed_feasible(const Arrangement& h, std::span<const int> prefix) {
  return max_slack(h, prefix).slack >= 0;
}

/// A rational point strictly on the s-side of every hyperplane, re-verified
/// by substitution.
inline std::optional<RationalVector> witness(const Arrangement& h, const SignVector& s) {
  detail::check_length(h, s);
  auto sol = max_slack(h, s.signs());
  if (sol.slack <= 0) return std::nullopt;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (s[i] * h.evaluate(i, sol.point) <= 0) {
      throw InternalError("witness failed re-substitution at hyperplane " + std::to_string(i + 1));
    }
  }
  return std::move(sol.point);
}

/// Independent decision procedure by Fourier-Motzkin elimination.
inline bool is_feasible_fourier_motzkin(const Arrangement& h, const SignVector& s) {
  detail::check_length(h, s);
  std::vector<LinearConstraint> system;
  for (std::size_t i = 0; i < h.size(); ++i) {
    LinearConstraint row{RationalVector(static_cast<std::size_t>(h.dimension())),
                         s[i] * h.offsets()[i], true};
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) row.coeffs[j] = s[i] * h.normals()[i][j];
    system.push_back(std::move(row));
  }
  return fourier_motzkin_feasible(std::move(system), static_cast<std::size_t>(h.dimension()));
}

namespace detail {

// Depth-first over sign prefixes, '-' before '+'. A prefix whose open system
// is infeasible (t* <= 0) has no feasible extension; this prunes every prefix
// with an infeasible closed relaxation and more.
inline void enumerate_from(const Arrangement& h, std::vector<int>& prefix,
                           std::vector<SignVector>& out) {
  if (prefix.size() == h.size()) {
    out.emplace_back(prefix);
    return;
  }
  for (int sign : {-1, 1}) {
    prefix.push_back(sign);
    if (max_slack(h, prefix).slack > 0) enumerate_from(h, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// S_H. With jobs > 1 the subtrees below a shallow frontier are enumerated
/// on worker threads; the result is sorted, so output does not depend on jobs.
inline CellSet enumerate_cells(const Arrangement& h, const Budget& budget = {},
                               unsigned jobs = 1) {
  if (h.size() > static_cast<std::size_t>(budget.max_hyperplanes)) {
    throw BudgetExceeded("cell enumeration limited to m <= " +
                         std::to_string(budget.max_hyperplanes) + " hyperplanes");
  }
  std::vector<SignVector> cells;
  if (jobs <= 1) {
    std::vector<int> prefix;
    detail::enumerate_from(h, prefix, cells);
  } else {
    std::vector<std::vector<int>> frontier{{}};
    while (frontier.size() < 4 * jobs && frontier.front().size() < h.size()) {
      std::vector<std::vector<int>> next;
      for (const auto& p : frontier) {
        for (int sign : {-1, 1}) {
          auto q = p;
          q.push_back(sign);
          if (max_slack(h, q).slack > 0) next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::vector<SignVector>> partial(frontier.size());
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
          auto prefix = frontier[i];
          detail::enumerate_from(h, prefix, partial[i]);
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& part : partial) cells.insert(cells.end(), part.begin(), part.end());
  }
  std::sort(cells.begin(), cells.end());
  return CellSet{h, std::move(cells)};
}

struct ShatteringProfile {
  SetFamily shattered;
  SetFamily strongly_shattered;
};

/// str(S_H) and sstr(S_H) for an arrangement in general position.
inline ShatteringProfile cell_shattering_profile(const Arrangement& h, const Budget& budget = {},
                                                 unsigned jobs = 1) {
  if (h.size() > static_cast<std::size_t>(budget.max_profile_hyperplanes)) {
    throw BudgetExceeded("shattering profile limited to m <= " +
                         std::to_string(budget.max_profile_hyperplanes) + " hyperplanes");
  }
  if (!is_general_position(h)) throw DomainError("arrangement is not in general position");
  const auto cells = enumerate_cells(h, budget, jobs).as_point_set();
  return {shattered_family(cells), strongly_shattered_family(cells)};
}

/// Hyperplanes from the vectors v_j = (t_j, t_j^2, ..., t_j^{k+1}): normal
/// (v_1..v_k), offset v_{k+1}. Distinct nonzero t_j give general position.
inline Arrangement vandermonde_arrangement(std::span<const Rational> t, int k) {
  if (k < 1) throw DomainError("arrangement dimension k must be >= 1");
  std::set<Rational> distinct(t.begin(), t.end());
  if (distinct.size() != t.size() || distinct.contains(Rational(0))) {
    throw DomainError("Vandermonde nodes must be distinct and nonzero");
  }
  std::vector<RationalVector> normals;
  RationalVector offsets;
  for (const auto& tj : t) {
    RationalVector v;
    Rational power = tj;
    for (int e = 1; e <= k + 1; ++e) {
      v.push_back(power);
      power *= tj;
    }
    offsets.push_back(v.back());
    v.pop_back();
    normals.push_back(std::move(v));
  }
  return Arrangement(k, std::move(normals), std::move(offsets));
}

/// Deterministic from `seed`: nodes t_j = ±a/b with 1 <= a <= 3m, 1 <= b <= 3.
inline Arrangement random_general_arrangement(int m, int k, std::uint64_t seed) {
  if (m < 1 || k < 1) throw DomainError("random arrangement needs m, k >= 1");
  std::mt19937_64 rng(seed);
  std::set<Rational> used;
  RationalVector t;
  const std::uint64_t span = 3 * static_cast<std::uint64_t>(m);
  while (t.size() < static_cast<std::size_t>(m)) {
    const auto num = static_cast<long long>(rng() % span + 1);
    const auto den = static_cast<long long>(rng() % 3 + 1);
    const bool negative = (rng() & 1U) != 0;
    Rational v(num, den);
    if (negative) v = -v;
    if (used.insert(v).second) t.push_back(v);
  }
  auto h = vandermonde_arrangement(t, k);
  if (!is_general_position(h)) {
    throw InternalError("Vandermonde arrangement failed the general position check");
  }
  return h;
}

/// sum_{i <= k} C(m, i): the cell count of m hyperplanes in general position in R^k.
inline std::uint64_t general_position_cell_count(int m, int k) {
  return binomial_prefix_sum(m, k);
}

}  // namespace hypalg
