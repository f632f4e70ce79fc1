#include "locustra/scott.hpp"

#include <algorithm>
#include <numeric>

namespace locustra {

namespace {

void check_over(const FiniteFrame& f, const UpperFamily& u) {
  if (u.frame != &f) throw Error("upper family belongs to a different frame");
}

// d_set without the membership ceremony, for hot loops over generated
// upper sets.
Mask d_of(const FiniteFrame& f, Mask upper) {
  Mask d = 0;
  for (int a = 0; a < f.size(); ++a)
    if ((f.annihilators(a) & upper) != 0) d |= mask_bit(a);
  return d;
}

// Elements in a linear extension with every strict upper bound first.
std::vector<int> descending_extension(const FinitePoset& order) {
  std::vector<int> elems(order.size());
  std::iota(elems.begin(), elems.end(), 0);
  std::sort(elems.begin(), elems.end(), [&](int a, int b) {
    const int ca = mask_count(order.up(a)), cb = mask_count(order.up(b));
    return ca != cb ? ca < cb : a < b;
  });
  return elems;
}

template <typename Visit>
void visit_upper_sets(const FinitePoset& order, Visit&& visit) {
  const std::vector<int> elems = descending_extension(order);
  const int n = order.size();
  std::vector<Mask> need(n);
  for (int k = 0; k < n; ++k) need[k] = order.up(elems[k]) & ~mask_bit(elems[k]);
  const auto rec = [&](auto&& self, int k, Mask current) -> void {
    if (k == n) {
      visit(current);
      return;
    }
    self(self, k + 1, current);
    if (mask_subset(need[k], current)) self(self, k + 1, current | mask_bit(elems[k]));
  };
  rec(rec, 0, Mask{0});
}

}  // namespace

UpperFamily UpperFamily::over(const FiniteFrame& f, Mask members) {
  if (!mask_subset(members, f.carrier()))
    throw Error("members reference elements out of range");
  Mask bad = 0;
  mask_for_each(members, [&](int a) {
    if (!mask_subset(f.up(a), members)) bad |= mask_bit(a);
  });
  if (bad != 0)
    throw Error("family not upward closed at element " +
                std::to_string(std::countr_zero(bad)));
  return UpperFamily{&f, members};
}

ScottTopology scott_topology(const FiniteFrame& f, std::size_t max_opens) {
  ScottTopology out{&f, {}};
  visit_upper_sets(f.order(), [&](Mask u) {
    if (out.opens.size() >= max_opens)
      throw InstanceTooLarge("Scott topology exceeds the cap of " + std::to_string(max_opens) +
                             " opens");
    out.opens.push_back(u);
  });
  std::sort(out.opens.begin(), out.opens.end(), mask_less);
  return out;
}

std::size_t count_upper_sets(const FinitePoset& order, std::size_t cap) {
  std::size_t count = 0;
  visit_upper_sets(order, [&](Mask) {
    if (count >= cap)
      throw InstanceTooLarge("Scott topology exceeds the cap of " + std::to_string(cap) +
                             " opens");
    ++count;
  });
  return count;
}

Mask d_set(const FiniteFrame& f, const UpperFamily& u) {
  check_over(f, u);
  return d_of(f, u.members);
}

Mask b_set(const FiniteFrame& f, const UpperFamily& u) {
  check_over(f, u);
  Mask b = 0;
  mask_for_each(u.members, [&](int x) { b |= mask_bit(f.neg(x)); });
  return b;
}

int phi(const FiniteFrame& f, const UpperFamily& u) {
  check_over(f, u);
  return big_join(f, d_of(f, u.members));
}

bool is_filter(const FiniteFrame& f, Mask members) {
  if (members == 0) return false;
  bool ok = true;
  mask_for_each(members, [&](int a) {
    if (!mask_subset(f.up(a), members)) ok = false;
    mask_for_each(members, [&](int b) {
      if (!mask_test(members, f.meet(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_ideal(const FiniteFrame& f, Mask members) {
  if (members == 0) return false;
  bool ok = true;
  mask_for_each(members, [&](int a) {
    if (!mask_subset(f.down(a), members)) ok = false;
    mask_for_each(members, [&](int b) {
      if (!mask_test(members, f.join(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_directed(const FiniteFrame& f, Mask members) {
  if (members == 0) return false;
  bool ok = true;
  mask_for_each(members, [&](int a) {
    mask_for_each(members, [&](int b) {
      if ((f.up(a) & f.up(b) & members) == 0) ok = false;
    });
  });
  return ok;
}

FrameHom<SetFamilyFrame, FiniteFrame> phi_as_hom(const FiniteFrame& f, std::size_t max_opens) {
  ScottTopology st = scott_topology(f, max_opens);
  std::vector<Mask> principal(f.size());
  for (int b = 0; b < f.size(); ++b) principal[b] = f.up(b);
  SetFamilyFrame source = SetFamilyFrame::from_canonical(std::move(st.opens), std::move(principal));
  std::vector<int> map(source.size());
  for (int i = 0; i < source.size(); ++i) map[i] = big_join(f, d_of(f, source.set_of(i)));
  return {std::move(source), f, std::move(map)};
}

std::vector<Mask> f_map(const FiniteSpace& s) {
  const auto opens = s.opens();
  std::vector<Mask> ext(opens.size());
  for (std::size_t i = 0; i < opens.size(); ++i) ext[i] = exterior(s, opens[i]);
  std::vector<Mask> f(s.points(), 0);
  for (int x = 0; x < s.points(); ++x)
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (mask_test(ext[i], x)) f[x] |= opens[i];
  return f;
}

Verdict check_preimage_is_phi(const FiniteSpace& s, std::size_t max_opens) {
  const OpenSetFrame osf = open_set_frame(s);
  const auto hom = phi_as_hom(osf.frame, max_opens);
  const std::vector<Mask> f = f_map(s);
  std::vector<int> f_elem(s.points());
  for (int x = 0; x < s.points(); ++x) f_elem[x] = osf.element_of(f[x]);

  for (int i = 0; i < hom.source.size(); ++i) {
    const Mask scott_open = hom.source.set_of(i);
    Mask preimage = 0;
    for (int x = 0; x < s.points(); ++x)
      if (mask_test(scott_open, f_elem[x])) preimage |= mask_bit(x);
    if (preimage != osf.open_of[hom.map[i]])
      return Verdict::fail("scott-open min=" +
                           mask_to_csv(minimal_members(osf.frame.order(), scott_open)));
  }
  return Verdict::pass();
}

Booleanization booleanization(const FiniteFrame& f) {
  Mask fix = 0;
  for (int a = 0; a < f.size(); ++a)
    if (f.neg(f.neg(a)) == a) fix |= mask_bit(a);

  std::vector<int> elems;
  mask_for_each(fix, [&](int a) { elems.push_back(a); });
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(f.size(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;

  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (f.leq(elems[i], elems[j])) up[i] |= mask_bit(j);
  FinitePoset order = FinitePoset::from_up_rows(std::move(up));

  // Meets restrict; joins are neg neg of the ambient join. from_tables
  // validates that both are the bounds within the fixpoints.
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int mi = pos[f.meet(elems[i], elems[j])];
      const int jo = pos[f.neg(f.neg(f.join(elems[i], elems[j])))];
      if (mi < 0 || jo < 0) throw Error("double negation left the fixpoints");
      meet[static_cast<std::size_t>(i) * m + j] = mi;
      join[static_cast<std::size_t>(i) * m + j] = jo;
    }
  FiniteLattice lat = FiniteLattice::from_tables(std::move(order), std::move(meet),
                                                 std::move(join), pos[f.bottom()], pos[f.top()]);
  FiniteFrame frame = frame_from_lattice(std::move(lat));

  // Boolean: neg a complements a.
  for (int i = 0; i < m; ++i) {
    const int c = pos[f.neg(elems[i])];
    if (c < 0 || frame.meet(i, c) != frame.bottom() || frame.join(i, c) != frame.top())
      throw Error("double negation quotient is not Boolean");
  }
  return Booleanization{std::move(frame), std::move(elems), fix};
}

}  // namespace locustra
