#include "locustra/space.hpp"

#include <algorithm>

#include "locustra/errors.hpp"

namespace locustra {

FiniteSpace FiniteSpace::from_opens(int n, std::vector<Mask> opens) {
  if (n < 0) throw Error("negative point count");
  if (n > kMaxCarrier)
    throw InstanceTooLarge("space on " + std::to_string(n) + " points exceeds 64");
  std::sort(opens.begin(), opens.end(), mask_less);
  for (std::size_t i = 1; i < opens.size(); ++i)
    if (opens[i - 1] == opens[i]) throw Error("duplicate open {" + mask_to_csv(opens[i]) + "}");
  const Mask full = mask_all(n);
  for (Mask u : opens)
    if (!mask_subset(u, full)) throw Error("open {" + mask_to_csv(u) + "} leaves the carrier");
  if (opens.empty() || opens.front() != 0) throw Error("family missing the empty open");
  if (opens.back() != full) throw Error("family missing the full open {" + mask_to_csv(full) + "}");

  const auto find = [&](Mask m) {
    const auto it = std::lower_bound(opens.begin(), opens.end(), m, mask_less);
    return it != opens.end() && *it == m;
  };
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!find(opens[i] | opens[j]))
        throw Error("family not closed: missing union {" + mask_to_csv(opens[i] | opens[j]) +
                    "}");
      if (!find(opens[i] & opens[j]))
        throw Error("family not closed: missing intersection {" +
                    mask_to_csv(opens[i] & opens[j]) + "}");
    }
  return FiniteSpace(n, std::move(opens));
}

int FiniteSpace::open_index(Mask u) const {
  const auto it = std::lower_bound(opens_.begin(), opens_.end(), u, mask_less);
  return (it != opens_.end() && *it == u) ? static_cast<int>(it - opens_.begin()) : -1;
}

Mask closure(const FiniteSpace& s, Mask a) {
  if (!mask_subset(a, s.all())) throw Error("subset references points out of range");
  Mask c = s.all();
  for (Mask u : s.opens()) {
    const Mask closed = s.all() & ~u;
    if (mask_subset(a, closed)) c &= closed;
  }
  return c;
}

Mask exterior(const FiniteSpace& s, Mask u) {
  if (!s.is_open(u)) throw NotOpen("set {" + mask_to_csv(u) + "} is not open");
  return s.all() & ~closure(s, u);
}

Specialization specialization(const FiniteSpace& s) {
  Specialization out;
  out.above.assign(s.points(), s.all());
  for (int x = 0; x < s.points(); ++x)
    for (Mask u : s.opens())
      if (mask_test(u, x)) out.above[x] &= u;
  return out;
}

Verdict is_t0(const FiniteSpace& s) {
  const Specialization sp = specialization(s);
  for (int x = 0; x < s.points(); ++x)
    for (int y = x + 1; y < s.points(); ++y)
      if (sp.above[x] == sp.above[y])
        return Verdict::fail("points " + std::to_string(x) + "," + std::to_string(y));
  return Verdict::pass();
}

Verdict is_t1(const FiniteSpace& s) {
  for (int x = 0; x < s.points(); ++x)
    if (closure(s, mask_bit(x)) != mask_bit(x)) return Verdict::fail("point " + std::to_string(x));
  return Verdict::pass();
}

namespace {

bool separated(const FiniteSpace& s, int x, int y) {
  for (Mask u : s.opens()) {
    if (!mask_test(u, x)) continue;
    for (Mask v : s.opens())
      if (mask_test(v, y) && (u & v) == 0) return true;
  }
  return false;
}

}  // namespace

Verdict is_preregular(const FiniteSpace& s) {
  const Specialization sp = specialization(s);
  for (int x = 0; x < s.points(); ++x)
    for (int y = x + 1; y < s.points(); ++y) {
      if (sp.above[x] == sp.above[y]) continue;  // indistinguishable
      if (!separated(s, x, y))
        return Verdict::fail("points " + std::to_string(x) + "," + std::to_string(y));
    }
  return Verdict::pass();
}

Verdict is_hausdorff(const FiniteSpace& s) {
  for (int x = 0; x < s.points(); ++x)
    for (int y = x + 1; y < s.points(); ++y)
      if (!separated(s, x, y))
        return Verdict::fail("points " + std::to_string(x) + "," + std::to_string(y));
  return Verdict::pass();
}

Verdict is_sober(const FiniteSpace& s) {
  std::vector<Mask> closed;
  closed.reserve(s.opens().size());
  for (Mask u : s.opens()) closed.push_back(s.all() & ~u);
  std::sort(closed.begin(), closed.end(), mask_less);

  std::vector<Mask> point_closure(s.points());
  for (int x = 0; x < s.points(); ++x) point_closure[x] = closure(s, mask_bit(x));

  for (Mask c : closed) {
    if (c == 0) continue;
    bool reducible = false;
    for (Mask a : closed) {
      if (a == c || !mask_subset(a, c)) continue;
      for (Mask b : closed)
        if (b != c && (a | b) == c) {
          reducible = true;
          break;
        }
      if (reducible) break;
    }
    if (reducible) continue;
    int generic = 0;
    for (int x = 0; x < s.points(); ++x)
      if (point_closure[x] == c) ++generic;
    if (generic != 1)
      return Verdict::fail("closed {" + mask_to_csv(c) + "} generic-points " +
                           std::to_string(generic));
  }
  return Verdict::pass();
}

std::vector<Mask> points_to_primes(const FiniteSpace& s) {
  std::vector<Mask> p(s.points());
  for (int x = 0; x < s.points(); ++x) p[x] = s.all() & ~closure(s, mask_bit(x));
  return p;
}

NeighborhoodFilter neighborhood_filter(const FiniteSpace& s, int x) {
  if (x < 0 || x >= s.points()) throw Error("point " + std::to_string(x) + " out of range");
  NeighborhoodFilter nf;
  nf.point = x;
  const auto opens = s.opens();
  for (int i = 0; i < static_cast<int>(opens.size()); ++i)
    if (mask_test(opens[i], x)) nf.open_indices.push_back(i);
  // Filter laws hold by construction; keep them as hard assertions.
  for (int i : nf.open_indices)
    for (int j = 0; j < static_cast<int>(opens.size()); ++j)
      if (mask_subset(opens[i], opens[j]) &&
          !std::binary_search(nf.open_indices.begin(), nf.open_indices.end(), j))
        throw Error("neighborhood filter not upward closed");
  for (int i : nf.open_indices)
    for (int j : nf.open_indices) {
      const int k = s.open_index(opens[i] & opens[j]);
      if (k < 0 || !std::binary_search(nf.open_indices.begin(), nf.open_indices.end(), k))
        throw Error("neighborhood filter not closed under intersection");
    }
  return nf;
}

OpenSetFrame open_set_frame(const FiniteSpace& s) {
  const auto opens = s.opens();
  if (opens.size() > static_cast<std::size_t>(kMaxCarrier))
    throw InstanceTooLarge("open family of " + std::to_string(opens.size()) +
                           " sets exceeds the 64-element frame carrier");
  OpenSetFrame out{frame_from_lattice(
                       lattice_from_set_family(std::span<const Mask>(opens.data(), opens.size()))),
                   std::vector<Mask>(opens.begin(), opens.end())};
  return out;
}

int OpenSetFrame::element_of(Mask open) const {
  const auto it = std::lower_bound(open_of.begin(), open_of.end(), open, mask_less);
  if (it == open_of.end() || *it != open)
    throw UnknownElement("set {" + mask_to_csv(open) + "} is not an open of this space");
  return static_cast<int>(it - open_of.begin());
}

}  // namespace locustra
