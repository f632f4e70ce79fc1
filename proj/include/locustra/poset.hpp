#pragma once

#include <span>
#include <utility>
#include <vector>

#include "locustra/mask.hpp"

namespace locustra {

// Partial order on elements 0..n-1, kept as bit-mask rows in both
// directions. Construction validates reflexivity, antisymmetry and
// transitivity; instances are immutable afterwards.
class FinitePoset {
 public:
  static FinitePoset from_up_rows(std::vector<Mask> up);

  int size() const { return n_; }
  bool leq(int a, int b) const { return mask_test(up_[a], b); }
  Mask up(int a) const { return up_[a]; }      // {b : a <= b}
  Mask down(int a) const { return down_[a]; }  // {b : b <= a}
  Mask carrier() const { return mask_all(n_); }

  // Hasse edges (a,b) with b covering a, sorted lexicographically.
  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  FinitePoset(int n, std::vector<Mask> up, std::vector<Mask> down)
      : n_(n), up_(std::move(up)), down_(std::move(down)) {}

  int n_;
  std::vector<Mask> up_, down_;
};

// Reflexive-transitive closure of a cover list. Throws CycleDetected if
// the covers contain a directed cycle (including self-loops).
FinitePoset poset_from_covers(int n, std::span<const std::pair<int, int>> covers);

// Members of m with no other member strictly below them.
Mask minimal_members(const FinitePoset& p, Mask m);

// Smallest upward closed superset of m.
Mask upward_closure(const FinitePoset& p, Mask m);

}  // namespace locustra
