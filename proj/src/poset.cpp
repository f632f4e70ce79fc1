#include "locustra/poset.hpp"

#include <algorithm>

#include "locustra/errors.hpp"

namespace locustra {

FinitePoset FinitePoset::from_up_rows(std::vector<Mask> up) {
  const int n = static_cast<int>(up.size());
  if (n > kMaxCarrier)
    throw InstanceTooLarge("carrier of " + std::to_string(n) + " elements exceeds 64");
  const Mask all = mask_all(n);
  for (int i = 0; i < n; ++i) {
    if (!mask_subset(up[i], all)) throw Error("relation row references elements out of range");
    if (!mask_test(up[i], i)) throw Error("relation not reflexive at " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    mask_for_each(up[i] & ~mask_bit(i), [&](int j) {
      if (mask_test(up[j], i))
        throw Error("relation not antisymmetric at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    });
  for (int i = 0; i < n; ++i) {
    Mask reach = up[i];
    mask_for_each(up[i], [&](int j) { reach |= up[j]; });
    if (reach != up[i]) throw Error("relation not transitive at " + std::to_string(i));
  }
  std::vector<Mask> down(n, 0);
  for (int i = 0; i < n; ++i)
    mask_for_each(up[i], [&](int j) { down[j] |= mask_bit(i); });
  return FinitePoset(n, std::move(up), std::move(down));
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    const Mask strict_up = up_[i] & ~mask_bit(i);
    mask_for_each(strict_up, [&](int j) {
      if ((strict_up & down_[j] & ~mask_bit(j)) == 0) out.emplace_back(i, j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset poset_from_covers(int n, std::span<const std::pair<int, int>> covers) {
  if (n < 0) throw Error("negative element count");
  if (n > kMaxCarrier)
    throw InstanceTooLarge("carrier of " + std::to_string(n) + " elements exceeds 64");
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = mask_bit(i);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error("cover (" + std::to_string(a) + "," + std::to_string(b) +
                  ") references an element out of range");
    if (a == b)
      throw CycleDetected("cover (" + std::to_string(a) + "," + std::to_string(a) +
                          ") is a self-loop");
    up[a] |= mask_bit(b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask reach = up[i];
      mask_for_each(up[i], [&](int j) { reach |= up[j]; });
      if (reach != up[i]) {
        up[i] = reach;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    mask_for_each(up[i] & ~mask_bit(i), [&](int j) {
      if (mask_test(up[j], i))
        throw CycleDetected("directed cycle through " + std::to_string(i) + " and " +
                            std::to_string(j));
    });
  return FinitePoset::from_up_rows(std::move(up));
}

Mask minimal_members(const FinitePoset& p, Mask m) {
  Mask out = 0;
  mask_for_each(m, [&](int a) {
    if ((p.down(a) & m & ~mask_bit(a)) == 0) out |= mask_bit(a);
  });
  return out;
}

Mask upward_closure(const FinitePoset& p, Mask m) {
  Mask out = 0;
  mask_for_each(m, [&](int a) { out |= p.up(a); });
  return out;
}

}  // namespace locustra
