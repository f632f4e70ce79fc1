#include "locustra/spectrum.hpp"

#include <algorithm>

namespace locustra {

std::vector<int> primes(const FiniteFrame& f) {
  std::vector<int> out;
  for (int p = 0; p < f.size(); ++p) {
    if (p == f.top()) continue;
    // Equivalent to: the complement of the down-set of p is closed under
    // binary meets.
    const Mask outside = f.carrier() & ~f.down(p);
    bool prime = true;
    mask_for_each(outside, [&](int a) {
      mask_for_each(outside, [&](int b) {
        if (f.leq(f.meet(a, b), p)) prime = false;
      });
    });
    if (prime) out.push_back(p);
  }
  return out;
}

SpectrumSpace spectrum(const FiniteFrame& f) {
  std::vector<int> ps = primes(f);
  const int k = static_cast<int>(ps.size());
  std::vector<Mask> open_of(f.size(), 0);
  for (int a = 0; a < f.size(); ++a)
    for (int i = 0; i < k; ++i)
      if (!f.leq(a, ps[i])) open_of[a] |= mask_bit(i);

  std::vector<Mask> family = open_of;
  std::sort(family.begin(), family.end(), mask_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  FiniteSpace space = FiniteSpace::from_opens(k, std::move(family));
  return SpectrumSpace{std::move(ps), std::move(space), std::move(open_of)};
}

bool well_inside(const FiniteFrame& f, int a, int b) {
  return f.join(f.neg(a), b) == f.top();
}

Verdict scott_locale_check(const FiniteFrame& f, std::span<const Mask> scott_opens,
                           const SpectrumSpace& sp) {
  const int k = static_cast<int>(sp.primes.size());
  for (Mask u : scott_opens) {
    Mask prime_part = 0;
    for (int i = 0; i < k; ++i)
      if (mask_test(u, sp.primes[i])) prime_part |= mask_bit(i);
    if (!sp.space.is_open(prime_part))
      return Verdict::fail("scott-open min=" + mask_to_csv(minimal_members(f.order(), u)));
  }
  return Verdict::pass();
}

Verdict is_scott_locale(const FiniteFrame& f, std::size_t max_opens) {
  const SpectrumSpace sp = spectrum(f);
  const ScottTopology st = scott_topology(f, max_opens);
  return scott_locale_check(f, st.opens, sp);
}

Verdict is_preregular_locale(const FiniteFrame& f, R1Scope scope) {
  std::vector<int> targets;
  if (scope == R1Scope::primes) {
    targets = primes(f);
  } else {
    targets.resize(f.size());
    for (int a = 0; a < f.size(); ++a) targets[a] = a;
  }
  for (int x : targets) {
    Mask inside = 0;
    for (int a = 0; a < f.size(); ++a)
      if (well_inside(f, a, x)) inside |= mask_bit(a);
    if (big_join(f, inside) != x)
      return Verdict::fail((scope == R1Scope::primes ? "prime " : "element ") +
                           std::to_string(x));
  }
  return Verdict::pass();
}

}  // namespace locustra
