#pragma once

#include <cstddef>
#include <vector>

#include "locustra/frame.hpp"
#include "locustra/space.hpp"

namespace locustra {

inline constexpr std::size_t kDefaultMaxScottOpens = std::size_t{1} << 22;

// Upward closed subset of a frame carrier. On a finite lattice these are
// exactly the Scott opens; inaccessibility by directed joins is a
// property the tests assert directly, not an assumption the code relies
// on.
struct UpperFamily {
  const FiniteFrame* frame;
  Mask members;

  // Validates upward closure.
  static UpperFamily over(const FiniteFrame& f, Mask members);
};

// All upper sets of the carrier in canonical order. The count equals the
// number of antichains of the order (each upper set is generated by its
// minimal elements).
struct ScottTopology {
  const FiniteFrame* frame;
  std::vector<Mask> opens;
};

// Throws InstanceTooLarge when the open count would exceed max_opens.
ScottTopology scott_topology(const FiniteFrame& f,
                             std::size_t max_opens = kDefaultMaxScottOpens);

// Number of upper sets, aborting with InstanceTooLarge above the cap.
std::size_t count_upper_sets(const FinitePoset& order, std::size_t cap);

// {a : some b in u has a /\ b = 0}; equals {a : neg a in u}, is downward
// closed, and is an ideal whenever u is a filter.
Mask d_set(const FiniteFrame& f, const UpperFamily& u);

// {neg b : b in u}; its join agrees with the join of d_set.
Mask b_set(const FiniteFrame& f, const UpperFamily& u);

// Join of d_set(f, u).
int phi(const FiniteFrame& f, const UpperFamily& u);

bool is_filter(const FiniteFrame& f, Mask members);
bool is_ideal(const FiniteFrame& f, Mask members);
bool is_directed(const FiniteFrame& f, Mask members);

// The map open -> phi(open) from the frame of Scott opens of f to f. The
// source carries the principal-up structure, so verification stays
// feasible past the pairwise limit. phi values are computed once per open
// and reused through the returned table.
FrameHom<SetFamilyFrame, FiniteFrame> phi_as_hom(
    const FiniteFrame& f, std::size_t max_opens = kDefaultMaxScottOpens);

// f(x): the union of all opens whose exterior contains x. Satisfies
// y in f(x)  iff  x and y have disjoint open neighborhoods  iff  x in f(y).
std::vector<Mask> f_map(const FiniteSpace& s);

// For every Scott open U of the frame of opens: {x : f(x) in U} must be
// the open that phi assigns to U.
Verdict check_preimage_is_phi(const FiniteSpace& s,
                              std::size_t max_opens = kDefaultMaxScottOpens);

// Fixpoints of double negation. Meets are inherited; joins are the double
// negation of the ambient join, which construction validates to be the
// least upper bound within the fixpoints. The result is Boolean: neg a
// complements a.
struct Booleanization {
  FiniteFrame frame;
  std::vector<int> element_of;  // sub index -> ambient element, ascending
  Mask fixpoints;               // ambient mask {a : neg neg a = a}
};
Booleanization booleanization(const FiniteFrame& f);

}  // namespace locustra
