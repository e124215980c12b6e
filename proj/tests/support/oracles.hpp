#pragma once

// Slow reference implementations used only by the tests. They work on plain
// strings and nested vectors and share no code with the library beyond the
// rational type.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/field.hpp"

namespace oracle {

using Rational = hypalg::Rational;
using Integer = hypalg::Integer;

// Points as '0'/'1' strings, character j is coordinate j+1.
using Cube = std::set<std::string>;
using IndexSet = std::vector<int>;  // sorted, 1-based

inline std::string bits(std::uint32_t p, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((p >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline Cube cube_of(const hypalg::PointSet& c) {
  Cube out;
  for (auto p : c) out.insert(bits(p, c.dimension()));
  return out;
}

inline std::vector<IndexSet> all_index_sets(int n) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    IndexSet s;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1U) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

inline std::set<IndexSet> shattered(const Cube& c, int n) {
  std::set<IndexSet> out;
  for (const auto& idx : all_index_sets(n)) {
    std::set<std::string> seen;
    for (const auto& p : c) {
      std::string pattern;
      for (int i : idx) pattern += p[static_cast<std::size_t>(i - 1)];
      seen.insert(pattern);
    }
    if (seen.size() == (std::size_t{1} << idx.size())) out.insert(idx);
  }
  return out;
}

inline std::set<IndexSet> strongly_shattered(const Cube& c, int n) {
  std::set<IndexSet> out;
  for (const auto& idx : all_index_sets(n)) {
    for (const auto& base : c) {
      bool full = true;
      for (std::uint32_t m = 0; m < (1U << idx.size()) && full; ++m) {
        std::string q = base;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          q[static_cast<std::size_t>(idx[j] - 1)] = ((m >> j) & 1U) ? '1' : '0';
        }
        full = c.count(q) != 0;
      }
      if (full) {
        out.insert(idx);
        break;
      }
    }
  }
  return out;
}

inline Cube down_shift(const Cube& c, int i) {
  Cube out;
  for (const auto& p : c) {
    std::string q = p;
    q[static_cast<std::size_t>(i - 1)] = '0';
    if (p[static_cast<std::size_t>(i - 1)] == '1' && c.count(q) == 0) {
      out.insert(q);
    } else {
      out.insert(p);
    }
  }
  return out;
}

inline std::set<IndexSet> as_index_sets(const Cube& c) {
  std::set<IndexSet> out;
  for (const auto& p : c) {
    IndexSet s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == '1') s.push_back(static_cast<int>(i) + 1);
    }
    out.insert(s);
  }
  return out;
}

inline std::size_t count_up_to(const std::set<IndexSet>& f, int d) {
  return static_cast<std::size_t>(std::count_if(
      f.begin(), f.end(), [d](const IndexSet& s) { return static_cast<int>(s.size()) <= d; }));
}

inline std::set<IndexSet> to_index_sets(const hypalg::SetFamily& f) {
  std::set<IndexSet> out;
  for (auto s : f) out.insert(hypalg::indices_of(s));
  return out;
}

// Rank over GF(p) by plain row reduction on long longs.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
  auto power = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (auto& row : a) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const long long inv = power(a[r][c], p - 2);  // Fermat
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Rank over Q by fraction-free Bareiss elimination on big integers.
inline std::size_t rank_rational(const std::vector<std::vector<long long>>& in) {
  std::vector<std::vector<Integer>> a;
  for (const auto& row : in) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Leibniz determinant; only for tiny matrices.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Degree <= d evaluation matrix as small integers; rows follow `c`.
inline std::vector<std::vector<long long>> evaluation_matrix(const Cube& c, int n, int d) {
  std::vector<IndexSet> monomials;
  for (const auto& s : all_index_sets(n)) {
    if (static_cast<int>(s.size()) <= d) monomials.push_back(s);
  }
  std::vector<std::vector<long long>> m;
  for (const auto& p : c) {
    std::vector<long long> row;
    for (const auto& mono : monomials) {
      long long v = 1;
      for (int i : mono) v *= p[static_cast<std::size_t>(i - 1)] == '1' ? 1 : 0;
      row.push_back(v);
    }
    m.push_back(row);
  }
  return m;
}

// p == 0 means Q.
inline std::size_t hilbert(const Cube& c, int n, int d, long long p) {
  const auto m = evaluation_matrix(c, n, d);
  return p == 0 ? rank_rational(m) : rank_mod_p(m, p);
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

inline std::size_t binomial_sum(int n, int d) {
  std::size_t s = 0;
  for (int j = 0; j <= d; ++j) s += binomial(n, j);
  return s;
}

// All downward-closed families on [n] by filtering every family of subsets.
// n <= 3 only (2^8 candidates).
inline std::vector<std::set<IndexSet>> downward_closed_families(int n) {
  const auto subsets = all_index_sets(n);
  std::vector<std::set<IndexSet>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
    std::set<IndexSet> f;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if ((mask >> i) & 1U) f.insert(subsets[i]);
    }
    bool closed = true;
    for (const auto& a : f) {
      for (std::size_t drop = 0; drop < a.size() && closed; ++drop) {
        IndexSet b = a;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(drop));
        closed = f.count(b) != 0;
      }
    }
    if (closed) out.push_back(f);
  }
  return out;
}

// Minimum over every GF(2) polynomial of degree <= d of the disagreement
// with truth table `f` (index = point with coordinate 1 as most significant).
inline std::size_t best_approx(const std::string& f, int n, int d) {
  std::vector<IndexSet> monomials;
  for (const auto& s : all_index_sets(n)) {
    if (static_cast<int>(s.size()) <= d) monomials.push_back(s);
  }
  std::size_t best = f.size();
  for (std::uint64_t coeffs = 0; coeffs < (std::uint64_t{1} << monomials.size()); ++coeffs) {
    std::size_t wrong = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
      int value = 0;
      for (std::size_t k = 0; k < monomials.size(); ++k) {
        if (!((coeffs >> k) & 1U)) continue;
        int term = 1;
        for (int i : monomials[k]) term &= static_cast<int>((x >> (n - i)) & 1U);
        value ^= term;
      }
      if (value != f[x] - '0') ++wrong;
    }
    best = std::min(best, wrong);
  }
  return best;
}

}  // namespace oracle
