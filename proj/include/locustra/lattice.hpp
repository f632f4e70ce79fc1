#pragma once

#include <span>
#include <vector>

#include "locustra/poset.hpp"

namespace locustra {

// Bounded lattice with tabulated binary meets and joins. Every
// construction path validates the tables against the order: meet(a,b)
// must be the greatest lower bound of {a,b} under leq, join(a,b) the
// least upper bound.
class FiniteLattice {
 public:
  // Derives the tables from the order; throws NotALattice naming a pair
  // with a missing bound.
  static FiniteLattice from_poset(const FinitePoset& order);

  // Accepts externally computed tables and validates them against the
  // order element by element.
  static FiniteLattice from_tables(FinitePoset order, std::vector<int> meet,
                                   std::vector<int> join, int bottom, int top);

  int size() const { return n_; }
  const FinitePoset& order() const { return order_; }
  bool leq(int a, int b) const { return order_.leq(a, b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  FiniteLattice(FinitePoset order, std::vector<int> meet, std::vector<int> join, int bottom,
                int top);

  int n_;
  FinitePoset order_;
  std::vector<int> meet_, join_;
  int bottom_, top_;
};

inline FiniteLattice lattice_from_poset(const FinitePoset& order) {
  return FiniteLattice::from_poset(order);
}

// Lattice of a family of sets closed under pairwise union and
// intersection, ordered by inclusion. The family must be given in
// canonical (size, value) order without duplicates; element i is
// family[i]. Throws if a pairwise union or intersection is missing.
FiniteLattice lattice_from_set_family(std::span<const Mask> family);

}  // namespace locustra
