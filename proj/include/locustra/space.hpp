#pragma once

#include <span>
#include <vector>

#include "locustra/frame.hpp"
#include "locustra/verdict.hpp"

namespace locustra {

// Finite topological space on points 0..n-1. The family of opens is kept
// in canonical (size, value) order; construction validates that the
// family contains the empty set and the whole carrier and is closed under
// pairwise union and intersection. The empty space (n = 0) is admitted,
// with the single open {} serving as both bottom and top.
class FiniteSpace {
 public:
  static FiniteSpace from_opens(int n, std::vector<Mask> opens);

  int points() const { return n_; }
  Mask all() const { return mask_all(n_); }
  std::span<const Mask> opens() const { return opens_; }
  int open_index(Mask u) const;  // position in canonical order, or -1
  bool is_open(Mask u) const { return open_index(u) >= 0; }

 private:
  FiniteSpace(int n, std::vector<Mask> opens) : n_(n), opens_(std::move(opens)) {}

  int n_;
  std::vector<Mask> opens_;
};

// Smallest closed set containing a.
Mask closure(const FiniteSpace& s, Mask a);

// Complement of the closure of an open; equals the pseudo-complement of u
// in the frame of opens. Throws NotOpen when u is not in the family.
Mask exterior(const FiniteSpace& s, Mask u);

// Specialization preorder, with the convention x <= y iff x lies in the
// closure of {y}, equivalently iff every open neighborhood of x is also
// one of y. above[x] is then the minimal open set around x.
struct Specialization {
  std::vector<Mask> above;  // above[x] = {y : x <= y}
  bool leq(int x, int y) const { return mask_test(above[x], y); }
};
Specialization specialization(const FiniteSpace& s);

Verdict is_t0(const FiniteSpace& s);
Verdict is_t1(const FiniteSpace& s);
Verdict is_preregular(const FiniteSpace& s);
Verdict is_hausdorff(const FiniteSpace& s);
Verdict is_sober(const FiniteSpace& s);

// p(x): the complement of the closure of {x}, always an open set and a
// prime element of the frame of opens.
std::vector<Mask> points_to_primes(const FiniteSpace& s);

// All opens containing a point; a filter of the frame of opens.
struct NeighborhoodFilter {
  int point;
  std::vector<int> open_indices;  // ascending positions in the family
};
NeighborhoodFilter neighborhood_filter(const FiniteSpace& s, int x);

// The frame of opens ordered by inclusion, with both directions of the
// open <-> element correspondence.
struct OpenSetFrame {
  FiniteFrame frame;
  std::vector<Mask> open_of;  // element index -> open, canonical order
  int element_of(Mask open) const;
};
OpenSetFrame open_set_frame(const FiniteSpace& s);

}  // namespace locustra
