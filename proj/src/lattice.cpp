#include "locustra/lattice.hpp"

#include <algorithm>

#include "locustra/errors.hpp"

namespace locustra {

FiniteLattice::FiniteLattice(FinitePoset order, std::vector<int> meet, std::vector<int> join,
                             int bottom, int top)
    : n_(order.size()),
      order_(std::move(order)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bottom_(bottom),
      top_(top) {}

FiniteLattice FiniteLattice::from_poset(const FinitePoset& order) {
  const int n = order.size();
  if (n == 0) throw Error("a lattice needs a nonempty carrier");
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // Least upper bound: the unique minimum of the common upper bounds.
      const Mask uppers = order.up(a) & order.up(b);
      int lub = -1;
      mask_for_each(uppers, [&](int c) {
        if (mask_subset(uppers, order.up(c))) lub = c;
      });
      if (lub < 0) throw NotALattice(a, b, false);
      join[static_cast<std::size_t>(a) * n + b] = lub;

      const Mask lowers = order.down(a) & order.down(b);
      int glb = -1;
      mask_for_each(lowers, [&](int c) {
        if (mask_subset(lowers, order.down(c))) glb = c;
      });
      if (glb < 0) throw NotALattice(a, b, true);
      meet[static_cast<std::size_t>(a) * n + b] = glb;
    }
  int bottom = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = meet[static_cast<std::size_t>(bottom) * n + i];
    top = join[static_cast<std::size_t>(top) * n + i];
  }
  return FiniteLattice(order, std::move(meet), std::move(join), bottom, top);
}

FiniteLattice FiniteLattice::from_tables(FinitePoset order, std::vector<int> meet,
                                         std::vector<int> join, int bottom, int top) {
  const int n = order.size();
  if (n == 0) throw Error("a lattice needs a nonempty carrier");
  if (meet.size() != static_cast<std::size_t>(n) * n ||
      join.size() != static_cast<std::size_t>(n) * n)
    throw Error("lattice tables have the wrong shape");
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    throw Error("lattice bounds out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int m = meet[static_cast<std::size_t>(a) * n + b];
      if (m < 0 || m >= n || !order.leq(m, a) || !order.leq(m, b))
        throw Error("meet table disagrees with the order at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      const int j = join[static_cast<std::size_t>(a) * n + b];
      if (j < 0 || j >= n || !order.leq(a, j) || !order.leq(b, j))
        throw Error("join table disagrees with the order at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      for (int c = 0; c < n; ++c) {
        if (order.leq(c, a) && order.leq(c, b) && !order.leq(c, m))
          throw Error("meet table entry is not the greatest lower bound at (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
        if (order.leq(a, c) && order.leq(b, c) && !order.leq(j, c))
          throw Error("join table entry is not the least upper bound at (" + std::to_string(a) +
                      "," + std::to_string(b) + ")");
      }
    }
  for (int a = 0; a < n; ++a)
    if (!order.leq(bottom, a) || !order.leq(a, top))
      throw Error("bounds do not bound element " + std::to_string(a));
  return FiniteLattice(std::move(order), std::move(meet), std::move(join), bottom, top);
}

FiniteLattice lattice_from_set_family(std::span<const Mask> family) {
  const int n = static_cast<int>(family.size());
  if (n == 0) throw Error("empty set family");
  if (n > kMaxCarrier)
    throw InstanceTooLarge("set family of " + std::to_string(n) + " members exceeds 64");
  for (int i = 1; i < n; ++i)
    if (!mask_less(family[i - 1], family[i]))
      throw Error("set family not in canonical order or not duplicate-free");

  const auto find = [&](Mask m) -> int {
    const auto it = std::lower_bound(family.begin(), family.end(), m, mask_less);
    return (it != family.end() && *it == m) ? static_cast<int>(it - family.begin()) : -1;
  };

  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mask_subset(family[i], family[j])) up[i] |= mask_bit(j);
  FinitePoset order = FinitePoset::from_up_rows(std::move(up));

  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int m = find(family[i] & family[j]);
      if (m < 0)
        throw Error("family not closed: missing intersection {" +
                    mask_to_csv(family[i] & family[j]) + "}");
      const int u = find(family[i] | family[j]);
      if (u < 0)
        throw Error("family not closed: missing union {" + mask_to_csv(family[i] | family[j]) +
                    "}");
      meet[static_cast<std::size_t>(i) * n + j] = m;
      join[static_cast<std::size_t>(i) * n + j] = u;
    }
  int bottom = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = meet[static_cast<std::size_t>(bottom) * n + i];
    top = join[static_cast<std::size_t>(top) * n + i];
  }
  return FiniteLattice::from_tables(std::move(order), std::move(meet), std::move(join), bottom,
                                    top);
}

}  // namespace locustra
