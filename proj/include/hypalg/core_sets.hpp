#pragma once

// Subsets of the boolean hypercube {0,1}^n and families of subsets of [n].
//
// A point c in {0,1}^n and a subset of [n] are the same machine word: bit
// (i-1) holds coordinate i. Every operator here is an exhaustive scan, so the
// ambient dimension is capped at kMaxDimension.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypalg/error.hpp"

namespace hypalg {

using Subset = std::uint32_t;
using Point = Subset;

inline constexpr int kMaxDimension = 30;

inline constexpr Subset coordinate_bit(int i) { return Subset{1} << (i - 1); }

inline constexpr Subset full_mask(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline int cardinality(Subset s) { return std::popcount(s); }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

/// Sorted 1-based coordinates of `s`.
inline std::vector<int> indices_of(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline Subset subset_from_indices(std::span<const int> indices, int n) {
  Subset s = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw DomainError("coordinate " + std::to_string(i) + " outside [1, " +
                        std::to_string(n) + "]");
    }
    if ((s & coordinate_bit(i)) != 0) {
      throw DomainError("coordinate " + std::to_string(i) + " repeated in index list");
    }
    s |= coordinate_bit(i);
  }
  return s;
}

/// Graded lexicographic order: by size, then lexicographically on the sorted
/// index lists (smaller indices first). This is the global storage order of
/// monomials, family members and matrix rows/columns.
inline bool graded_less(Subset a, Subset b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // The smallest coordinate in exactly one of the two decides; the list
  // containing it is lexicographically smaller.
  const Subset lowest = (a ^ b) & ~((a ^ b) - 1);
  return (a & lowest) != 0;
}

/// Lexicographic order on sorted index lists ([] < [1] < [1,2] < [2]).
inline bool list_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// A subset C of {0,1}^n with distinct points, kept sorted by value.
class PointSet {
 public:
  explicit PointSet(int n) : n_(n) { check_dimension(n); }

  PointSet(int n, std::vector<Point> points) : n_(n), points_(std::move(points)) {
    check_dimension(n);
    const Subset mask = full_mask(n);
    for (Point p : points_) {
      if ((p & ~mask) != 0) throw DomainError("point uses a coordinate beyond n");
    }
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
      throw DomainError("duplicate point in point set");
    }
  }

  /// The whole cube {0,1}^n.
  static PointSet cube(int n) {
    check_dimension(n);
    if (n > 24) throw BudgetExceeded("refusing to materialize {0,1}^n for n > 24");
    std::vector<Point> pts(std::size_t{1} << n);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Point>(i);
    return PointSet(n, std::move(pts));
  }

  int dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(Point p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  static void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension) {
      throw DomainError("dimension n=" + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxDimension) + "]");
    }
  }

  int n_;
  std::vector<Point> points_;
};

/// A family of subsets of [n], members stored in graded order.
class SetFamily {
 public:
  explicit SetFamily(int n) : n_(n) { check_dimension(n); }

  SetFamily(int n, std::vector<Subset> members, bool downward_closed = false)
      : n_(n), members_(std::move(members)), downward_closed_(downward_closed) {
    check_dimension(n);
    const Subset mask = full_mask(n);
    for (Subset s : members_) {
      if ((s & ~mask) != 0) throw DomainError("family member uses an index beyond n");
    }
    std::sort(members_.begin(), members_.end(), graded_less);
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw DomainError("duplicate member in set family");
    }
  }

  /// All subsets of [n] of size at most k.
  static SetFamily up_to_size(int n, int k) {
    check_dimension(n);
    if (n > 24) throw BudgetExceeded("refusing to materialize 2^[n] for n > 24");
    std::vector<Subset> out;
    for (Subset s = 0; s <= full_mask(n); ++s) {
      if (std::popcount(s) <= k) out.push_back(s);
      if (s == full_mask(n)) break;
    }
    return SetFamily(n, std::move(out), true);
  }

  int dimension() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Subset> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// True when the family was produced by a construction guaranteeing
  /// downward-closedness. `is_downward_closed` checks it exactly.
  bool flagged_downward_closed() const { return downward_closed_; }

  bool contains(Subset s) const {
    return std::binary_search(members_.begin(), members_.end(), s, graded_less);
  }

  std::optional<std::size_t> index_of(Subset s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, graded_less);
    if (it == members_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
  }

  /// |{I in family : |I| <= d}|
  std::size_t count_up_to(int d) const {
    return static_cast<std::size_t>(std::count_if(
        members_.begin(), members_.end(), [d](Subset s) { return std::popcount(s) <= d; }));
  }

  /// Largest member size; -1 for the empty family.
  int max_member_size() const {
    return members_.empty() ? -1 : std::popcount(members_.back());
  }

  bool is_subfamily_of(const SetFamily& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](Subset s) { return other.contains(s); });
  }

  /// Same members (ignores the downward-closed flag).
  bool same_members(const SetFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  static void check_dimension(int n) {
    if (n < 0 || n > kMaxDimension) {
      throw DomainError("family dimension n=" + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxDimension) + "]");
    }
  }

  int n_;
  std::vector<Subset> members_;
  bool downward_closed_ = false;
};

/// An assignment `values` on the coordinates `support` (values ⊆ support).
struct Pattern {
  Subset support = 0;
  Subset values = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline SetFamily as_family(const PointSet& c) {
  return SetFamily(c.dimension(), {c.begin(), c.end()});
}

inline PointSet as_point_set(const SetFamily& f) {
  return PointSet(std::max(f.dimension(), 1), {f.begin(), f.end()});
}

namespace detail {

inline void check_subset(const PointSet& c, Subset i) {
  if ((i & ~full_mask(c.dimension())) != 0) {
    throw DomainError("index set contains a coordinate > n=" +
                      std::to_string(c.dimension()));
  }
}

// Packs the bits of `value` selected by `mask` into the low bits (software pext).
inline std::uint32_t compress(Subset value, Subset mask) {
  std::uint32_t out = 0;
  int k = 0;
  while (mask != 0) {
    const Subset low = mask & ~(mask - 1);
    if ((value & low) != 0) out |= std::uint32_t{1} << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

inline Subset expand(std::uint32_t packed, Subset mask) {
  Subset out = 0;
  int k = 0;
  while (mask != 0) {
    const Subset low = mask & ~(mask - 1);
    if ((packed >> k) & 1U) out |= low;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

// Level-wise enumeration of a downward-closed family given a membership
// predicate that is itself monotone: a candidate of size k+1 is tested only
// when all of its k-subsets were accepted.
template <class Keep>
SetFamily enumerate_downward_closed(int n, Keep&& keep) {
  std::vector<Subset> accepted;
  if (!keep(Subset{0})) return SetFamily(n, {}, true);
  std::unordered_set<Subset> present{0};
  std::vector<Subset> level{0};
  while (!level.empty()) {
    accepted.insert(accepted.end(), level.begin(), level.end());
    std::vector<Subset> next;
    for (Subset s : level) {
      const int top = s == 0 ? 0 : std::bit_width(s);
      for (int i = top; i < n; ++i) {
        const Subset t = s | (Subset{1} << i);
        bool all_faces = true;
        for (Subset rest = t; rest != 0 && all_faces; rest &= rest - 1) {
          const Subset low = rest & ~(rest - 1);
          all_faces = present.contains(t ^ low);
        }
        if (all_faces && keep(t)) next.push_back(t);
      }
    }
    present.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return SetFamily(n, std::move(accepted), true);
}

}  // namespace detail

/// A pattern on `i` realized by no point of `c`, if one exists.
inline std::optional<Pattern> missing_pattern(const PointSet& c, Subset i) {
  detail::check_subset(c, i);
  const std::uint64_t patterns = std::uint64_t{1} << std::popcount(i);
  std::vector<std::uint32_t> seen;
  seen.reserve(c.size());
  for (Point p : c) seen.push_back(detail::compress(p, i));
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  // Realized patterns are sorted and distinct: the first gap is missing.
  std::uint64_t expected = 0;
  for (std::uint32_t v : seen) {
    if (v != expected) break;
    ++expected;
  }
  if (expected == patterns) return std::nullopt;
  return Pattern{i, detail::expand(static_cast<std::uint32_t>(expected), i)};
}

/// Every pattern on `i` is the restriction of some point of `c`.
inline bool is_shattered(const PointSet& c, Subset i) {
  detail::check_subset(c, i);
  // 2^|I| distinct restrictions need at least that many points.
  if (c.size() < (std::size_t{1} << std::popcount(i))) {
    return false;
  }
  return !missing_pattern(c, i).has_value();
}

/// A pattern on [n] \ i all of whose 2^|i| extensions lie in `c`.
inline std::optional<Pattern> strong_shattering_witness(const PointSet& c, Subset i) {
  detail::check_subset(c, i);
  const std::size_t need = std::size_t{1} << std::popcount(i);
  if (c.size() < need) return std::nullopt;
  const Subset rest = full_mask(c.dimension()) & ~i;
  std::vector<Subset> keys;
  keys.reserve(c.size());
  for (Point p : c) keys.push_back(p & rest);
  std::sort(keys.begin(), keys.end());
  for (std::size_t lo = 0; lo < keys.size();) {
    std::size_t hi = lo;
    while (hi < keys.size() && keys[hi] == keys[lo]) ++hi;
    if (hi - lo == need) return Pattern{rest, keys[lo]};
    lo = hi;
  }
  return std::nullopt;
}

/// `c` contains a whole subcube spanning the coordinates `i`.
inline bool is_strongly_shattered(const PointSet& c, Subset i) {
  return strong_shattering_witness(c, i).has_value();
}

/// str(C): all shattered subsets. Empty for empty C.
inline SetFamily shattered_family(const PointSet& c) {
  return detail::enumerate_downward_closed(
      c.dimension(), [&](Subset i) { return is_shattered(c, i); });
}

/// sstr(C): all strongly shattered subsets. Empty for empty C.
inline SetFamily strongly_shattered_family(const PointSet& c) {
  return detail::enumerate_downward_closed(
      c.dimension(), [&](Subset i) { return is_strongly_shattered(c, i); });
}

inline int vc_dimension(const PointSet& c) {
  if (c.empty()) throw DomainError("VC dimension of the empty set is undefined");
  return shattered_family(c).max_member_size();
}

/// S_i: each point with c_i = 1 moves to c - e_i unless that point is in C.
inline PointSet down_shift(const PointSet& c, int i) {
  if (i < 1 || i > c.dimension()) {
    throw DomainError("shift coordinate " + std::to_string(i) + " outside [1, " +
                      std::to_string(c.dimension()) + "]");
  }
  const Subset bit = coordinate_bit(i);
  std::vector<Point> out;
  out.reserve(c.size());
  for (Point p : c) {
    out.push_back((p & bit) != 0 && !c.contains(p ^ bit) ? p ^ bit : p);
  }
  return PointSet(c.dimension(), std::move(out));
}

/// S_n(S_{n-1}(... S_1(C))) as a family flagged downward-closed.
inline SetFamily full_shift(const PointSet& c) {
  PointSet d = c;
  for (int i = 1; i <= c.dimension(); ++i) d = down_shift(d, i);
  return SetFamily(c.dimension(), {d.begin(), d.end()}, true);
}

inline bool is_downward_closed(const SetFamily& f) {
  for (Subset a : f) {
    for (Subset rest = a; rest != 0; rest &= rest - 1) {
      if (!f.contains(a ^ (rest & ~(rest - 1)))) return false;
    }
  }
  return true;
}

/// Smallest downward-closed family containing `seeds`.
inline SetFamily downward_closure(int n, std::span<const Subset> seeds) {
  std::unordered_set<Subset> seen;
  std::vector<Subset> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    const Subset s = stack.back();
    stack.pop_back();
    if (!seen.insert(s).second) continue;
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      stack.push_back(s ^ (rest & ~(rest - 1)));
    }
  }
  return SetFamily(n, {seen.begin(), seen.end()}, true);
}

}  // namespace hypalg
