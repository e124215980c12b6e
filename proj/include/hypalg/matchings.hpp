#pragma once

// Prescribed-intersection bijections on downward-closed families.
//
// For a downward-closed D and phi : D -> D with phi(a) ⊆ a, the GF(2)
// matrix M[a][b] = [a ∩ b = phi(a)] is nonsingular, so it contains a
// permutation pi with a ∩ pi(a) = phi(a) for every a. The permutation is
// read off a perfect matching on the support of M.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hypalg/core_sets.hpp"
#include "hypalg/error.hpp"
#include "hypalg/exact_linalg.hpp"
#include "hypalg/field.hpp"

namespace hypalg {

/// phi on a downward-closed family; phi()[i] is the image of members()[i].
class IntersectionMap {
 public:
  IntersectionMap(SetFamily family, std::vector<Subset> phi)
      : family_(std::move(family)), phi_(std::move(phi)) {
    if (!is_downward_closed(family_)) throw DomainError("family is not downward-closed");
    if (phi_.size() != family_.size()) throw DomainError("phi must be defined on every member");
    for (std::size_t i = 0; i < phi_.size(); ++i) {
      if (!is_subset(phi_[i], family_.members()[i])) {
        throw DomainError("phi(a) must be a subset of a");
      }
    }
  }

  static IntersectionMap from_map(SetFamily family, const std::map<Subset, Subset>& phi) {
    std::vector<Subset> images;
    images.reserve(family.size());
    for (Subset a : family) {
      auto it = phi.find(a);
      if (it == phi.end()) throw DomainError("phi is missing a member of the family");
      images.push_back(it->second);
    }
    if (phi.size() != family.size()) throw DomainError("phi maps a set outside the family");
    return IntersectionMap(std::move(family), std::move(images));
  }

  /// phi ≡ ∅
  static IntersectionMap empty_intersections(SetFamily family) {
    std::vector<Subset> images(family.size(), 0);
    return IntersectionMap(std::move(family), std::move(images));
  }

  const SetFamily& family() const { return family_; }
  const std::vector<Subset>& phi() const { return phi_; }

 private:
  SetFamily family_;
  std::vector<Subset> phi_;
};

/// Rows and columns indexed by D in graded order; (a, b) is 1 iff a ∩ b = phi(a).
inline Matrix<PrimeField> intersection_matrix(const IntersectionMap& im) {
  const auto members = im.family().members();
  Matrix<PrimeField> m(PrimeField(2), members.size(), members.size());
  for (std::size_t r = 0; r < members.size(); ++r) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      if ((members[r] & members[c]) == im.phi()[r]) m.at(r, c) = 1;
    }
  }
  return m;
}

/// Evaluations of prod_{i in phi(a)} x_i prod_{i in a \ phi(a)} (1 + x_i) at
/// each point b of D, computed over GF(2) factor by factor.
inline Matrix<PrimeField> basis_functions_matrix(const IntersectionMap& im) {
  const PrimeField f(2);
  const auto members = im.family().members();
  Matrix<PrimeField> m(f, members.size(), members.size());
  for (std::size_t r = 0; r < members.size(); ++r) {
    const Subset fixed = im.phi()[r];
    const Subset free = members[r] & ~fixed;
    for (std::size_t c = 0; c < members.size(); ++c) {
      const Subset b = members[c];
      auto value = f.one();
      for (int i : indices_of(fixed)) value = f.mul(value, f.from_int((b >> (i - 1)) & 1U));
      for (int i : indices_of(free)) {
        value = f.mul(value, f.add(f.one(), f.from_int((b >> (i - 1)) & 1U)));
      }
      m.at(r, c) = value;
    }
  }
  return m;
}

inline std::size_t basis_functions_rank(const IntersectionMap& im) {
  return rank(basis_functions_matrix(im));
}

/// Maximum bipartite matching by Hopcroft-Karp. `adjacency[u]` lists the
/// right vertices adjacent to left vertex u; returns match_of_left.
class HopcroftKarp {
 public:
  static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

  HopcroftKarp(std::vector<std::vector<std::size_t>> adjacency, std::size_t right_size)
      : adj_(std::move(adjacency)),
        match_left_(adj_.size(), kUnmatched),
        match_right_(right_size, kUnmatched),
        dist_(adj_.size()) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kUnmatched && dfs(u)) ++matched;
      }
    }
    return matched;
  }

  const std::vector<std::size_t>& match_of_left() const { return match_left_; }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kUnmatched) {
          reachable_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

/// A permutation of a family: image[i] is the index of pi(members()[i]).
struct Bijection {
  SetFamily family;
  std::vector<std::size_t> image;

  Subset operator()(Subset a) const {
    const auto i = family.index_of(a);
    if (!i) throw DomainError("set is not a member of the family");
    return family.members()[image[*i]];
  }

  std::vector<std::pair<Subset, Subset>> pairs() const {
    std::vector<std::pair<Subset, Subset>> out;
    for (std::size_t i = 0; i < image.size(); ++i) {
      out.emplace_back(family.members()[i], family.members()[image[i]]);
    }
    return out;
  }
};

/// pi : D -> D with a ∩ pi(a) = phi(a) for all a.
inline Bijection prescribed_bijection(const IntersectionMap& im) {
  const auto m = intersection_matrix(im);
  if (determinant_gf2(m) != 1) {
    throw InternalError("intersection matrix is singular over GF(2)");
  }
  std::vector<std::vector<std::size_t>> adjacency(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) adjacency[r].push_back(c);
    }
  }
  HopcroftKarp matcher(std::move(adjacency), m.cols());
  if (matcher.run() != m.rows()) {
    throw InternalError("nonsingular intersection matrix has no perfect matching");
  }
  Bijection pi{im.family(), matcher.match_of_left()};
  const auto members = im.family().members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((members[i] & members[pi.image[i]]) != im.phi()[i]) {
      throw InternalError("matched pair violates the prescribed intersection");
    }
  }
  return pi;
}

/// pi with a ∩ pi(a) = ∅ for all a.
inline Bijection pseudo_complement(const SetFamily& d) {
  return prescribed_bijection(IntersectionMap::empty_intersections(d));
}

struct IntersectingFamilyCheck {
  std::size_t size = 0;  // largest pairwise-intersecting subfamily
  bool ok = false;       // size <= |D| / 2
};

namespace detail {

// Maximum clique by branch and bound over bitmask adjacency.
inline void grow_clique(const std::vector<std::uint32_t>& adj, std::uint32_t candidates,
                        std::size_t current, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, current);
    return;
  }
  while (candidates != 0) {
    if (current + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, candidates & adj[static_cast<std::size_t>(v)], current + 1, best);
  }
}

}  // namespace detail

/// Brute-force maximum intersecting subfamily of a downward-closed D.
inline IntersectingFamilyCheck max_intersecting_family_check(const SetFamily& d,
                                                             const Budget& budget = {}) {
  if (d.size() > static_cast<std::size_t>(budget.max_family_search)) {
    throw BudgetExceeded("intersecting-family search limited to |D| <= " +
                         std::to_string(budget.max_family_search));
  }
  if (!is_downward_closed(d)) throw DomainError("family is not downward-closed");
  // The empty set meets nothing, so only nonempty members can take part.
  std::vector<Subset> nonempty;
  for (Subset a : d) {
    if (a != 0) nonempty.push_back(a);
  }
  std::vector<std::uint32_t> adj(nonempty.size(), 0);
  for (std::size_t i = 0; i < nonempty.size(); ++i) {
    for (std::size_t j = 0; j < nonempty.size(); ++j) {
      if (i != j && (nonempty[i] & nonempty[j]) != 0) adj[i] |= std::uint32_t{1} << j;
    }
  }
  std::size_t best = 0;
  const std::uint32_t all =
      nonempty.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << nonempty.size()) - 1);
  detail::grow_clique(adj, all, 0, best);
  return {best, 2 * best <= d.size()};
}

}  // namespace hypalg
