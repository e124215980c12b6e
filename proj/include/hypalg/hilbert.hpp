#pragma once

// Evaluation matrices of multilinear monomials on point sets, the Hilbert
// function h_d(C, F), interpolation degree, and the monomial families
// indexed by str(C), sstr(C) and the full down-shift of C.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/exact_linalg.hpp"
#include "hypalg/field.hpp"

namespace hypalg {

/// The monomial x_I = prod_{i in I} x_i.
struct Monomial {
  Subset support = 0;

  int degree() const { return cardinality(support); }

  /// Value at a 0/1 point: 1 iff I ⊆ c.
  bool evaluate(Point c) const { return is_subset(support, c); }

  std::string to_string() const {
    if (support == 0) return "1";
    std::string out;
    for (int i : indices_of(support)) out += "x" + std::to_string(i);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// sum_{j <= d} C(n, j), saturating at 2^62.
inline std::uint64_t binomial_prefix_sum(int n, int d) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, j)
  for (int j = 0; j <= d && j <= n; ++j) {
    total = std::min(kCap, total + term);
    term = term * static_cast<std::uint64_t>(n - j) / static_cast<std::uint64_t>(j + 1);
  }
  return total;
}

/// All size-k subsets of [n] in lexicographic order of their index lists.
inline std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= Subset{1} << i;
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

/// Monomials of degree <= d in the global column order (degree, then lex).
inline std::vector<Monomial> monomials_up_to(int n, int d, const Budget& budget = {}) {
  if (binomial_prefix_sum(n, d) > (std::uint64_t{1} << budget.column_log2)) {
    throw BudgetExceeded("degree-" + std::to_string(d) + " monomials in n=" +
                         std::to_string(n) + " exceed 2^" +
                         std::to_string(budget.column_log2) + " columns");
  }
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    for (Subset s : subsets_of_size(n, k)) out.push_back(Monomial{s});
  }
  return out;
}

/// E^{d,C}: rows are the points of C (ascending), columns the monomials.
template <class Field>
struct EvaluationMap {
  PointSet points;
  int degree;
  std::vector<Monomial> monomials;
  Matrix<Field> matrix;
};

template <class Field>
Matrix<Field> evaluation_matrix_on(const PointSet& c, const std::vector<Monomial>& columns,
                                   const Field& field) {
  Matrix<Field> m(field, c.size(), columns.size());
  std::size_t r = 0;
  for (Point p : c) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].evaluate(p)) m.at(r, j) = field.one();
    }
    ++r;
  }
  return m;
}

inline std::vector<Monomial> monomials_of(const SetFamily& f) {
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (Subset s : f) out.push_back(Monomial{s});
  return out;
}

namespace detail {
inline void check_degree(const PointSet& c, int d) {
  if (d < 0 || d > c.dimension()) {
    throw DomainError("degree d=" + std::to_string(d) + " outside [0, " +
                      std::to_string(c.dimension()) + "]");
  }
}
inline void check_nonempty(const PointSet& c) {
  if (c.empty()) throw DomainError("operation requires a nonempty point set");
}
}  // namespace detail

template <class Field>
EvaluationMap<Field> evaluation_matrix(const PointSet& c, int d, const Field& field,
                                       const Budget& budget = {}) {
  detail::check_degree(c, d);
  auto cols = monomials_up_to(c.dimension(), d, budget);
  auto m = evaluation_matrix_on(c, cols, field);
  return EvaluationMap<Field>{c, d, std::move(cols), std::move(m)};
}

/// h_d(C, F) = rank of E^{d,C}.
inline std::size_t hilbert_function(const PointSet& c, int d, const FieldSpec& field,
                                    const Budget& budget = {}) {
  detail::check_nonempty(c);
  return with_field(field, [&](const auto& f) {
    return rank(evaluation_matrix(c, d, f, budget).matrix);
  });
}

/// h_0, ..., h_n by adding monomial columns degree by degree to one
/// maintained echelon basis. Stops as soon as the rank reaches |C|.
inline std::vector<std::size_t> hilbert_series(const PointSet& c, const FieldSpec& field,
                                               const Budget& budget = {}) {
  detail::check_nonempty(c);
  const int n = c.dimension();
  return with_field(field, [&](const auto& f) {
    SpanBasis basis(f, c.size());
    std::vector<std::size_t> h;
    const std::uint64_t column_limit = std::uint64_t{1} << budget.column_log2;
    std::uint64_t columns = 0;
    for (int d = 0; d <= n; ++d) {
      if (basis.rank() < c.size()) {
        for (Subset s : subsets_of_size(n, d)) {
          if (++columns > column_limit) {
            throw BudgetExceeded("Hilbert series needs more than 2^" +
                                 std::to_string(budget.column_log2) + " columns");
          }
          std::vector<typename std::decay_t<decltype(f)>::value_type> col(c.size(), f.zero());
          std::size_t r = 0;
          for (Point p : c) {
            if (is_subset(s, p)) col[r] = f.one();
            ++r;
          }
          basis.insert(std::move(col));
          if (basis.rank() == c.size()) break;
        }
      }
      h.push_back(basis.rank());
    }
    return h;
  });
}

/// Least d with h_d(C, F) = |C|.
inline int interpolation_degree(const PointSet& c, const FieldSpec& field,
                                const Budget& budget = {}) {
  const auto h = hilbert_series(c, field, budget);
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] == c.size()) return static_cast<int>(d);
  }
  throw InternalError("h_n(C) != |C|");
}

struct HilbertBounds {
  std::size_t lower_sstr = 0;
  std::size_t lower_shift = 0;
  std::size_t upper_str = 0;

  friend bool operator==(const HilbertBounds&, const HilbertBounds&) = default;
};

/// Field-independent bounds on h_d from sstr(C), the full shift and str(C).
inline HilbertBounds hilbert_bounds(const PointSet& c, int d) {
  detail::check_nonempty(c);
  detail::check_degree(c, d);
  return HilbertBounds{strongly_shattered_family(c).count_up_to(d),
                       full_shift(c).count_up_to(d), shattered_family(c).count_up_to(d)};
}

/// {x_I : I in full_shift(C)}.
inline std::vector<Monomial> shift_basis(const PointSet& c) {
  detail::check_nonempty(c);
  return monomials_of(full_shift(c));
}

/// The shift-basis columns of E^{n,C} form a square nonsingular matrix.
inline bool verify_shift_basis(const PointSet& c, const FieldSpec& field) {
  const auto basis = shift_basis(c);
  if (basis.size() != c.size()) return false;
  return with_field(field, [&](const auto& f) {
    return rank(evaluation_matrix_on(c, basis, f)) == c.size();
  });
}

/// The monomials indexed by str(C) span all functions C -> F.
inline bool verify_str_spanning(const PointSet& c, const FieldSpec& field) {
  detail::check_nonempty(c);
  const auto cols = monomials_of(shattered_family(c));
  return with_field(field, [&](const auto& f) {
    return rank(evaluation_matrix_on(c, cols, f)) == c.size();
  });
}

/// The monomials indexed by sstr(C) are linearly independent on C.
inline bool verify_sstr_independent(const PointSet& c, const FieldSpec& field) {
  detail::check_nonempty(c);
  const auto cols = monomials_of(strongly_shattered_family(c));
  return with_field(field, [&](const auto& f) {
    return rank(evaluation_matrix_on(c, cols, f)) == cols.size();
  });
}

/// Affine independence of the points of C in F^n: the differences c - c_0
/// are linearly independent.
inline bool affinely_independent(const PointSet& c, const FieldSpec& field) {
  detail::check_nonempty(c);
  return with_field(field, [&](const auto& f) {
    const auto pts = c.points();
    Matrix m(f, pts.size() - 1, static_cast<std::size_t>(c.dimension()));
    for (std::size_t r = 1; r < pts.size(); ++r) {
      for (int i = 0; i < c.dimension(); ++i) {
        const auto a = f.from_int((pts[r] >> i) & 1U);
        const auto b = f.from_int((pts[0] >> i) & 1U);
        m.at(r - 1, static_cast<std::size_t>(i)) = f.sub(a, b);
      }
    }
    return rank(m) == pts.size() - 1;
  });
}

/// Whether intdeg(C, F) = 1. Cross-checks that intdeg(C, F) <= 1 exactly
/// when C is affinely independent, throwing InternalError otherwise.
inline bool intdeg_one_characterization(const PointSet& c, const FieldSpec& field) {
  const int degree = interpolation_degree(c, field);
  const bool affine = affinely_independent(c, field);
  if ((degree <= 1) != affine) {
    throw InternalError("interpolation degree " + std::to_string(degree) +
                        " disagrees with affine independence over " + field.name());
  }
  return degree == 1;
}

}  // namespace hypalg
