#include "locustra/frame.hpp"

#include <algorithm>

namespace locustra {

FiniteFrame::FiniteFrame(FiniteLattice l, std::vector<int> neg, std::vector<Mask> ann)
    : lattice_(std::move(l)), neg_(std::move(neg)), ann_(std::move(ann)) {}

FiniteFrame frame_from_lattice(FiniteLattice l) {
  const int n = l.size();
  // Meet-over-join distributivity; the dual law follows in any lattice.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          throw NotDistributive(a, b, c);

  std::vector<Mask> ann(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l.meet(a, b) == l.bottom()) ann[a] |= mask_bit(b);
  std::vector<int> neg(n);
  for (int a = 0; a < n; ++a) {
    int acc = l.bottom();
    mask_for_each(ann[a], [&](int b) { acc = l.join(acc, b); });
    neg[a] = acc;
  }
  return FiniteFrame(std::move(l), std::move(neg), std::move(ann));
}

int big_join(const FiniteFrame& f, Mask subset) {
  if (!mask_subset(subset, f.carrier())) throw Error("subset references elements out of range");
  int acc = f.bottom();
  mask_for_each(subset, [&](int a) { acc = f.join(acc, a); });
  return acc;
}

SetFamilyFrame SetFamilyFrame::from_canonical(std::vector<Mask> family,
                                              std::optional<std::vector<Mask>> principal_up) {
  const int n = static_cast<int>(family.size());
  if (n == 0) throw Error("empty set family");
  for (int i = 1; i < n; ++i)
    if (!mask_less(family[i - 1], family[i]))
      throw Error("set family not in canonical order or not duplicate-free");

  SetFamilyFrame out;
  out.family_ = std::move(family);
  out.bucket_.assign(kMaxCarrier + 2, n);
  for (int i = n - 1; i >= 0; --i) out.bucket_[mask_count(out.family_[i])] = i;
  for (int pc = kMaxCarrier; pc >= 0; --pc)
    out.bucket_[pc] = std::min(out.bucket_[pc], out.bucket_[pc + 1]);
  out.principal_up_ = std::move(principal_up);

  int bottom = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    const int m = out.index_of(out.family_[bottom] & out.family_[i]);
    const int j = out.index_of(out.family_[top] | out.family_[i]);
    if (m < 0 || j < 0) throw Error("family not closed under intersection/union at its bounds");
    bottom = m;
    top = j;
  }
  out.bottom_ = bottom;
  out.top_ = top;

  // Full pairwise closure validation is eager below the pairwise limit;
  // the larger families the code produces are all-upper-set topologies,
  // whose closure is covered by tests.
  if (static_cast<std::size_t>(n) <= kPairCheckLimit) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (out.index_of(out.family_[i] & out.family_[j]) < 0)
          throw Error("family not closed: missing intersection {" +
                      mask_to_csv(out.family_[i] & out.family_[j]) + "}");
        if (out.index_of(out.family_[i] | out.family_[j]) < 0)
          throw Error("family not closed: missing union {" +
                      mask_to_csv(out.family_[i] | out.family_[j]) + "}");
      }
  }
  return out;
}

int SetFamilyFrame::index_of(Mask m) const {
  const int pc = mask_count(m);
  const auto first = family_.begin() + bucket_[pc];
  const auto last = family_.begin() + bucket_[pc + 1];
  const auto it = std::lower_bound(first, last, m);
  return (it != last && *it == m) ? static_cast<int>(it - family_.begin()) : -1;
}

}  // namespace locustra
