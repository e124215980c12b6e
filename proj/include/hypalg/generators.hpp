#pragma once

// Standard and seeded-random inputs: parity sets, basis vectors, random point
// sets, downward-closed families and intersection maps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/matchings.hpp"

namespace hypalg {

/// Even-weight points of {0,1}^n (odd-weight when `odd`).
inline PointSet parity_set(int n, bool odd = false) {
  if (n < 1 || n > 24) throw DomainError("parity set dimension must lie in [1, 24]");
  std::vector<Point> pts;
  for (Point x = 0; x <= full_mask(n); ++x) {
    if ((std::popcount(x) % 2 == 1) == odd) pts.push_back(x);
    if (x == full_mask(n)) break;
  }
  return PointSet(n, std::move(pts));
}

/// {e_1, ..., e_m} in {0,1}^n.
inline PointSet standard_basis(int m, int n) {
  if (m < 0 || m > n) throw DomainError("standard basis needs 0 <= m <= n");
  std::vector<Point> pts;
  for (int i = 1; i <= m; ++i) pts.push_back(coordinate_bit(i));
  return PointSet(n, std::move(pts));
}

/// `size` distinct uniformly random points of {0,1}^n.
template <class Rng>
PointSet random_point_set(int n, std::size_t size, Rng& rng) {
  if (n < 1 || n > kMaxDimension) throw DomainError("dimension out of range");
  const std::uint64_t cube = std::uint64_t{1} << n;
  if (size > cube) throw DomainError("more points requested than the cube holds");
  std::vector<Point> pts;
  if (size * 2 > cube) {
    for (std::uint64_t x = 0; x < cube; ++x) pts.push_back(static_cast<Point>(x));
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(size);
  } else {
    std::unordered_set<Point> seen;
    while (seen.size() < size) seen.insert(static_cast<Point>(rng() % cube));
    pts.assign(seen.begin(), seen.end());
  }
  return PointSet(n, std::move(pts));
}

/// Downward closure of a few random seeds (always contains ∅).
template <class Rng>
SetFamily random_downward_closed(int n, Rng& rng, int max_seeds = 3) {
  const std::uint64_t cube = std::uint64_t{1} << n;
  std::vector<Subset> seeds{0};
  const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_seeds + 1));
  for (int i = 0; i < count; ++i) seeds.push_back(static_cast<Subset>(rng() % cube));
  return downward_closure(n, seeds);
}

/// Every nonempty downward-closed family on [n], by a closure scan of all
/// 2^(2^n) candidate families. Only sensible for n <= 4.
inline std::vector<SetFamily> all_downward_closed(int n) {
  if (n < 0 || n > 4) throw BudgetExceeded("exhaustive family scan limited to n <= 4");
  const std::uint32_t universe = std::uint32_t{1} << n;
  std::vector<SetFamily> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << universe); ++mask) {
    std::vector<Subset> members;
    for (Subset s = 0; s < universe; ++s) {
      if ((mask >> s) & 1U) members.push_back(s);
    }
    SetFamily f(n, std::move(members));
    if (is_downward_closed(f)) out.push_back(SetFamily(n, {f.begin(), f.end()}, true));
  }
  return out;
}

/// phi(a) a uniformly random subset of a.
template <class Rng>
IntersectionMap random_intersection_map(const SetFamily& d, Rng& rng) {
  std::vector<Subset> phi;
  for (Subset a : d) phi.push_back(a & static_cast<Subset>(rng()));
  return IntersectionMap(d, std::move(phi));
}

/// Every valid phi on d (prod_a 2^|a| maps), passed one at a time to `visit`.
template <class Visit>
void for_each_intersection_map(const SetFamily& d, Visit&& visit) {
  const auto members = d.members();
  std::vector<Subset> phi(members.size(), 0);
  // Odometer over phi(a) ⊆ a, each digit stepping through submasks in ascending order.
  while (true) {
    visit(IntersectionMap(d, phi));
    std::size_t i = 0;
    for (; i < members.size(); ++i) {
      if (phi[i] != members[i]) {
        phi[i] = (phi[i] - members[i]) & members[i];
        break;
      }
      phi[i] = 0;
    }
    if (i == members.size()) return;
  }
}

}  // namespace hypalg
