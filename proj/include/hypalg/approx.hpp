#pragma once

// Polynomial approximation of boolean functions: the Hilbert-function lower
// bound on Pr[p(x) != f(x)], its proof lemmas as executable checks, and an
// exhaustive best-approximation oracle over GF(2) for tiny n.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/exact_linalg.hpp"
#include "hypalg/field.hpp"
#include "hypalg/hilbert.hpp"

namespace hypalg {

inline constexpr int kMaxTruthTableDimension = 24;

/// Position of point x in a truth table: coordinate 1 is the most
/// significant bit of the index.
inline std::size_t table_index(Point x, int n) {
  std::size_t idx = 0;
  for (int i = 1; i <= n; ++i) idx = (idx << 1) | ((x >> (i - 1)) & 1U);
  return idx;
}

inline Point point_at_index(std::size_t idx, int n) {
  Point x = 0;
  for (int i = n; i >= 1; --i) {
    if (idx & 1U) x |= coordinate_bit(i);
    idx >>= 1;
  }
  return x;
}

/// f : {0,1}^n -> {0,1} as a truth table of 2^n bits.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
    if (n_ < 1 || n_ > kMaxTruthTableDimension) {
      throw DomainError("truth table dimension must lie in [1, " +
                        std::to_string(kMaxTruthTableDimension) + "]");
    }
    if (table_.size() != (std::size_t{1} << n_)) {
      throw DomainError("truth table must have exactly 2^n entries");
    }
    for (auto v : table_) {
      if (v > 1) throw DomainError("truth table entries must be 0 or 1");
    }
  }

  /// From a string of 2^n characters '0'/'1'.
  static BooleanFunction parse(const std::string& text) {
    const std::size_t len = text.size();
    if (len < 2 || !std::has_single_bit(len)) {
      throw DomainError("truth table length must be a power of two >= 2, got " +
                        std::to_string(len));
    }
    std::vector<std::uint8_t> table;
    table.reserve(len);
    for (char ch : text) {
      if (ch != '0' && ch != '1') throw DomainError("truth table may only contain '0' and '1'");
      table.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return BooleanFunction(std::countr_zero(len), std::move(table));
  }

  /// The indicator function of S.
  static BooleanFunction indicator(const PointSet& s) {
    if (s.dimension() > kMaxTruthTableDimension) throw BudgetExceeded("truth table too large");
    std::vector<std::uint8_t> table(std::size_t{1} << s.dimension(), 0);
    for (Point p : s) table[table_index(p, s.dimension())] = 1;
    return BooleanFunction(s.dimension(), std::move(table));
  }

  int dimension() const { return n_; }
  bool operator()(Point x) const { return table_[table_index(x, n_)] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  /// S = f^{-1}(1)
  PointSet ones() const {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i]) pts.push_back(point_at_index(i, n_));
    }
    return PointSet(n_, std::move(pts));
  }

  std::string to_string() const {
    std::string out;
    for (auto v : table_) out += static_cast<char>('0' + v);
    return out;
  }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

/// A multilinear polynomial: monomial support -> nonzero coefficient.
template <class Field>
class MultilinearPoly {
 public:
  using value_type = typename Field::value_type;

  MultilinearPoly(Field field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1 || n > kMaxDimension) throw DomainError("polynomial dimension out of range");
  }

  const Field& field() const { return field_; }
  int dimension() const { return n_; }
  const std::map<Subset, value_type>& terms() const { return terms_; }

  void set_coefficient(Subset support, const value_type& c) {
    if ((support & ~full_mask(n_)) != 0) throw DomainError("monomial uses an index beyond n");
    if (field_.is_zero(c)) {
      terms_.erase(support);
    } else {
      terms_[support] = c;
    }
  }

  /// Largest support with a nonzero coefficient; the zero polynomial has degree 0.
  int degree() const {
    int d = 0;
    for (const auto& [s, c] : terms_) d = std::max(d, cardinality(s));
    return d;
  }

  value_type evaluate(Point x) const {
    value_type acc = field_.zero();
    for (const auto& [s, c] : terms_) {
      if (is_subset(s, x)) acc = field_.add(acc, c);
    }
    return acc;
  }

  /// P = {x : p(x) != 0}
  PointSet nonzero_set() const {
    if (n_ > kMaxTruthTableDimension) throw BudgetExceeded("cube too large to scan");
    std::vector<Point> pts;
    for (Point x = 0; x <= full_mask(n_); ++x) {
      if (!field_.is_zero(evaluate(x))) pts.push_back(x);
      if (x == full_mask(n_)) break;
    }
    return PointSet(n_, std::move(pts));
  }

 private:
  Field field_;
  int n_;
  std::map<Subset, value_type> terms_;
};

struct SmolenskyBound {
  Rational value;           // max(0, (2 h_d(S) - |S|) / 2^n)
  int degree_bound = 0;     // d = floor((n - deg_p - 1) / 2); -1 when vacuous
  bool vacuous = false;     // d < 0: the theorem says nothing
  std::size_t hilbert = 0;  // h_d(S, F)
  std::size_t support = 0;  // |S|
};

/// Lower bound on Pr_x[p(x) != f(x)] for any p with deg_F(p) = deg_p.
inline SmolenskyBound smolensky_bound(const BooleanFunction& f, int deg_p, const FieldSpec& field,
                                      const Budget& budget = {}) {
  const int n = f.dimension();
  if (deg_p < 0 || deg_p > n) {
    throw DomainError("polynomial degree " + std::to_string(deg_p) + " outside [0, " +
                      std::to_string(n) + "]");
  }
  const PointSet s = f.ones();
  if (s.empty()) throw DomainError("f^{-1}(1) must be nonempty");
  SmolenskyBound out;
  out.support = s.size();
  const int numerator = n - deg_p - 1;
  if (numerator < 0) {
    out.value = 0;
    out.degree_bound = -1;
    out.vacuous = true;
    return out;
  }
  out.degree_bound = numerator / 2;
  out.hilbert = hilbert_function(s, out.degree_bound, field, budget);
  const Rational raw = Rational(2 * static_cast<long long>(out.hilbert) -
                                static_cast<long long>(out.support)) /
                       Rational(Integer(1) << n);
  out.value = raw > 0 ? raw : Rational(0);
  return out;
}

/// The closed form 1/2 - 10 deg/sqrt(n) for odd n. Exact comparisons only:
/// sqrt(n) is irrational unless n is a perfect square.
class CorollaryBound {
 public:
  CorollaryBound(int n, int deg_p) : n_(n), deg_(deg_p) {
    if (n < 1 || n % 2 == 0) throw DomainError("corollary bound needs odd n >= 1");
    if (deg_p < 0) throw DomainError("polynomial degree must be nonnegative");
  }

  int n() const { return n_; }
  int degree() const { return deg_; }

  /// The closed form is <= 0.
  bool vacuous() const {
    // 1/2 <= 10 deg / sqrt(n)  <=>  n <= 400 deg^2
    return deg_ > 0 && static_cast<long long>(n_) <= 400LL * deg_ * deg_;
  }

  std::optional<Rational> exact() const {
    if (deg_ == 0) return Rational(1, 2);
    const auto root = static_cast<long long>(isqrt(n_));
    if (root * root != n_) return std::nullopt;
    return Rational(1, 2) - Rational(10LL * deg_, root);
  }

  /// closed form <= v, decided exactly.
  bool at_most(const Rational& v) const {
    const Rational gap = Rational(1, 2) - v;  // need gap <= 10 deg / sqrt(n)
    if (gap <= 0) return true;
    if (deg_ == 0) return false;
    return gap * gap * n_ <= Rational(100LL * deg_ * deg_);
  }

  /// Value clamped at 0; symbolic when irrational.
  std::string to_string() const {
    if (vacuous()) return "0";
    if (auto v = exact()) return v->str();
    return "1/2-10*" + std::to_string(deg_) + "/sqrt(" + std::to_string(n_) + ")";
  }

 private:
  static int isqrt(int v) {
    int r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }

  int n_;
  int deg_;
};

inline CorollaryBound corollary_bound(int n, int deg_p) { return CorollaryBound(n, deg_p); }

struct OracleResult {
  std::size_t disagreements = 0;
  std::vector<Subset> best_support;  // monomials of one optimal polynomial
};

/// min over GF(2) multilinear p with deg p <= d of |{x : p(x) != f(x)}|.
/// Coefficient vectors are walked in Gray-code order so each step flips one
/// monomial's evaluation vector.
inline OracleResult best_approx_disagreement(const BooleanFunction& f, int d,
                                             const Budget& budget = {}, unsigned jobs = 1) {
  const int n = f.dimension();
  if (n > 5) throw BudgetExceeded("approximation oracle limited to n <= 5");
  if (d < 0 || d > n) throw DomainError("degree outside [0, n]");
  const auto monomials = monomials_up_to(n, d);
  const int k = static_cast<int>(monomials.size());
  if (k > budget.oracle_log2) {
    throw BudgetExceeded("oracle would search 2^" + std::to_string(k) + " polynomials (limit 2^" +
                         std::to_string(budget.oracle_log2) + ")");
  }
  // Bit x of a mask is the value at the point with bit pattern x.
  std::vector<std::uint64_t> column(static_cast<std::size_t>(k), 0);
  std::uint64_t target = 0;
  const std::uint64_t points = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < points; ++x) {
    if (f(static_cast<Point>(x))) target |= std::uint64_t{1} << x;
    for (int j = 0; j < k; ++j) {
      if (monomials[static_cast<std::size_t>(j)].evaluate(static_cast<Point>(x))) {
        column[static_cast<std::size_t>(j)] |= std::uint64_t{1} << x;
      }
    }
  }

  // High coefficients fixed per task, low ones walked by Gray code. The task
  // split does not depend on `jobs`, so the reported optimum is the same for
  // any thread count.
  const int high = std::min(k, 6);
  const int low = k - high;
  struct Best {
    int count;
    std::uint64_t coeffs;
  };
  auto search = [&](std::uint64_t prefix) {
    std::uint64_t eval = 0;
    for (int j = 0; j < high; ++j) {
      if ((prefix >> j) & 1U) eval ^= column[static_cast<std::size_t>(low + j)];
    }
    Best best{std::popcount(eval ^ target), 0};
    std::uint64_t gray = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << low); ++g) {
      const int flip = std::countr_zero(g);
      gray ^= std::uint64_t{1} << flip;
      eval ^= column[static_cast<std::size_t>(flip)];
      const int count = std::popcount(eval ^ target);
      if (count < best.count) best = {count, gray};
    }
    best.coeffs |= prefix << low;
    return best;
  };

  Best best{static_cast<int>(points) + 1, 0};
  std::uint64_t best_task = 0;
  const std::uint64_t tasks = std::uint64_t{1} << high;
  if (jobs <= 1) {
    for (std::uint64_t t = 0; t < tasks; ++t) {
      const Best b = search(t);
      if (b.count < best.count) best = b;
    }
  } else {
    std::mutex lock;
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::uint64_t t = cursor++; t < tasks; t = cursor++) {
          const Best b = search(t);
          std::lock_guard guard(lock);
          if (b.count < best.count || (b.count == best.count && t < best_task)) {
            best = b;
            best_task = t;
          }
        }
      });
    }
    for (auto& t : workers) t.join();
  }
  OracleResult out;
  out.disagreements = static_cast<std::size_t>(best.count);
  for (int j = 0; j < k; ++j) {
    if ((best.coeffs >> j) & 1U) out.best_support.push_back(monomials[static_cast<std::size_t>(j)].support);
  }
  return out;
}

struct DifferenceLemmaCheck {
  std::size_t difference = 0;  // |S \ T|
  std::size_t hilbert_s = 0;
  std::size_t hilbert_t = 0;

  bool holds() const { return difference + hilbert_t >= hilbert_s; }
};

/// |S \ T| >= h_d(S, F) - h_d(T, F), with h_d of the empty set taken as 0.
inline DifferenceLemmaCheck check_difference_lemma(const PointSet& s, const PointSet& t, int d,
                                                   const FieldSpec& field) {
  if (s.dimension() != t.dimension()) throw DomainError("point sets differ in dimension");
  if (d < 0 || d > s.dimension()) throw DomainError("degree outside [0, n]");
  DifferenceLemmaCheck out;
  out.difference = static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [&](Point p) { return !t.contains(p); }));
  out.hilbert_s = s.empty() ? 0 : hilbert_function(s, d, field);
  out.hilbert_t = t.empty() ? 0 : hilbert_function(t, d, field);
  return out;
}

struct RankHalvingCheck {
  std::size_t rank = 0;          // rk E^{d,P}
  std::size_t support_size = 0;  // |P|

  bool holds() const { return 2 * rank <= support_size; }
};

/// rk(E^{d,P}) <= |P|/2 for P = {x : p(x) != 0}, when d < (n - deg p)/2.
template <class Field>
RankHalvingCheck check_rank_halving(const MultilinearPoly<Field>& p, int d) {
  const int n = p.dimension();
  if (d < 0 || 2 * d >= n - p.degree()) {
    throw DomainError("rank halving needs 0 <= d < (n - deg p)/2; got d=" + std::to_string(d) +
                      ", n=" + std::to_string(n) + ", deg=" + std::to_string(p.degree()));
  }
  const PointSet support = p.nonzero_set();
  if (support.empty()) throw DomainError("polynomial vanishes on the whole cube");
  RankHalvingCheck out;
  out.support_size = support.size();
  out.rank = rank(evaluation_matrix(support, d, p.field()).matrix);
  return out;
}

}  // namespace hypalg
