#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locustra/errors.hpp"
#include "locustra/lattice.hpp"
#include "locustra/verdict.hpp"

namespace locustra {

// Largest source carrier for which homomorphisms are verified pairwise
// and set families are closure-validated eagerly.
inline constexpr std::size_t kPairCheckLimit = 8192;

// Sources at most this large additionally get every literal subset join
// checked during homomorphism verification.
inline constexpr int kExhaustiveSubsetLimit = 12;

// Finite frame: a distributive bounded lattice. Binary distributivity is
// checked for all triples; on a finite lattice this is equivalent to the
// law with arbitrary joins, since every finite distributive lattice
// satisfies the infinite distributive law.
class FiniteFrame {
 public:
  int size() const { return lattice_.size(); }
  const FiniteLattice& lattice() const { return lattice_; }
  const FinitePoset& order() const { return lattice_.order(); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  Mask up(int a) const { return lattice_.order().up(a); }
  Mask down(int a) const { return lattice_.order().down(a); }
  Mask carrier() const { return mask_all(size()); }

  // Pseudo-complement: the largest b with a /\ b = 0.
  int neg(int a) const { return neg_[a]; }
  // {b : a /\ b = 0}
  Mask annihilators(int a) const { return ann_[a]; }

  friend FiniteFrame frame_from_lattice(FiniteLattice l);

 private:
  FiniteFrame(FiniteLattice l, std::vector<int> neg, std::vector<Mask> ann);

  FiniteLattice lattice_;
  std::vector<int> neg_;
  std::vector<Mask> ann_;
};

// Validates distributivity for all triples; throws NotDistributive naming
// the first violating triple.
FiniteFrame frame_from_lattice(FiniteLattice l);

// Least upper bound of a subset; the empty join is bottom.
int big_join(const FiniteFrame& f, Mask subset);

inline int pseudo_complement(const FiniteFrame& f, int a) { return f.neg(a); }

// Frame presented by a finite family of sets closed under pairwise union
// and intersection, ordered by inclusion. Meets and joins are set
// operations; an element's index is its position in canonical order.
// Families marked as "all upper sets of a base order" carry the base's
// principal up-sets, which unlocks the decomposition route in
// verify_frame_hom for carriers too large to check pairwise.
class SetFamilyFrame {
 public:
  static SetFamilyFrame from_canonical(std::vector<Mask> family,
                                       std::optional<std::vector<Mask>> principal_up = {});

  int size() const { return static_cast<int>(family_.size()); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  Mask set_of(int i) const { return family_[i]; }
  std::span<const Mask> sets() const { return family_; }
  bool leq(int a, int b) const { return mask_subset(family_[a], family_[b]); }
  int meet(int a, int b) const { return index_of(family_[a] & family_[b]); }
  int join(int a, int b) const { return index_of(family_[a] | family_[b]); }

  // Position of a set in the family, or -1.
  int index_of(Mask m) const;

  bool is_all_upper_sets() const { return principal_up_.has_value(); }
  std::span<const Mask> principal_up() const { return *principal_up_; }

 private:
  SetFamilyFrame() = default;

  std::vector<Mask> family_;                         // canonical order
  std::vector<int> bucket_;                          // first index per popcount
  std::optional<std::vector<Mask>> principal_up_;    // base element -> its up-set
  int bottom_ = 0, top_ = 0;
};

// Frame homomorphism candidate: an element map between two frame-like
// carriers.
template <typename Source = FiniteFrame, typename Target = FiniteFrame>
struct FrameHom {
  Source source;
  Target target;
  std::vector<int> map;  // source element -> target element
};

namespace detail {

// Complete homomorphism check for a source that is the family of all
// upper sets of a base order. Any upper set is the union of the
// principal up-sets of its members, so
//   (J)  h(U) = \/ {h(up b) : b in U}   for every U
// is equivalent to preservation of arbitrary unions, and given (J),
//   (M)  h(up b /\ up c) = h(up b) /\ h(up c)   for all base b, c
// is equivalent to preservation of binary intersections (distribute the
// two joins in the target and squeeze with monotonicity, which follows
// from (J)).
template <typename T>
Verdict verify_upper_set_hom(const SetFamilyFrame& src, const T& tgt, std::span<const int> map) {
  const auto principal = src.principal_up();
  const int base = static_cast<int>(principal.size());
  std::vector<int> hb(base);
  for (int b = 0; b < base; ++b) {
    const int idx = src.index_of(principal[b]);
    if (idx < 0) throw Error("principal up-set missing from family");
    hb[b] = map[idx];
  }
  for (int i = 0; i < src.size(); ++i) {
    int expect = tgt.bottom();
    mask_for_each(src.set_of(i), [&](int b) { expect = tgt.join(expect, hb[b]); });
    if (map[i] != expect)
      return Verdict::fail("join over {" + mask_to_csv(src.set_of(i)) + "}");
  }
  for (int b = 0; b < base; ++b)
    for (int c = b; c < base; ++c) {
      const int idx = src.index_of(principal[b] & principal[c]);
      if (idx < 0) throw Error("family not closed under intersection");
      if (map[idx] != tgt.meet(hb[b], hb[c]))
        return Verdict::fail("meet up(" + std::to_string(b) + "),up(" + std::to_string(c) + ")");
    }
  return Verdict::pass();
}

}  // namespace detail

// Confirms that the map preserves the top element, binary meets, and
// subset joins, or reports the first violated law with its witness.
// Preservation of binary joins together with the empty join is
// equivalent, on a finite lattice, to preservation of arbitrary subset
// joins (induction on subset size); sources with at most
// kExhaustiveSubsetLimit elements get every subset checked literally as
// well. Sources above pair_limit must be all-upper-set families, which
// are verified by the equivalent decomposition route.
template <typename S, typename T>
Verdict verify_frame_hom(const FrameHom<S, T>& hom, std::size_t pair_limit = kPairCheckLimit) {
  const S& src = hom.source;
  const T& tgt = hom.target;
  const int n = src.size();
  if (static_cast<int>(hom.map.size()) != n) throw Error("map does not cover the source carrier");
  for (int v : hom.map)
    if (v < 0 || v >= tgt.size()) throw Error("map value out of target range");

  if (hom.map[src.top()] != tgt.top()) return Verdict::fail("top");
  if (hom.map[src.bottom()] != tgt.bottom()) return Verdict::fail("empty-join");

  if (static_cast<std::size_t>(n) > pair_limit) {
    if constexpr (requires { src.is_all_upper_sets(); }) {
      if (src.is_all_upper_sets()) return detail::verify_upper_set_hom(src, tgt, hom.map);
    }
    throw InstanceTooLarge("source carrier of " + std::to_string(n) +
                           " elements is too large for pairwise verification");
  }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (hom.map[src.meet(i, j)] != tgt.meet(hom.map[i], hom.map[j]))
        return Verdict::fail("meet " + std::to_string(i) + "," + std::to_string(j));
      if (hom.map[src.join(i, j)] != tgt.join(hom.map[i], hom.map[j]))
        return Verdict::fail("join " + std::to_string(i) + "," + std::to_string(j));
    }

  if (n <= kExhaustiveSubsetLimit) {
    const Mask limit = mask_all(n);
    for (Mask s = 0;; ++s) {
      int lhs = src.bottom();
      int rhs = tgt.bottom();
      mask_for_each(s, [&](int i) {
        lhs = src.join(lhs, i);
        rhs = tgt.join(rhs, hom.map[i]);
      });
      if (hom.map[lhs] != rhs) return Verdict::fail("subset-join {" + mask_to_csv(s) + "}");
      if (s == limit) break;
    }
  }
  return Verdict::pass();
}

}  // namespace locustra
