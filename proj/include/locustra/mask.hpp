#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace locustra {

// Subset of a carrier with at most 64 indexed elements.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Mask mask_bit(int i) { return Mask{1} << i; }
constexpr bool mask_test(Mask m, int i) { return (m >> i) & 1; }
constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int mask_count(Mask m) { return std::popcount(m); }
constexpr Mask mask_all(int n) { return n >= kMaxCarrier ? ~Mask{0} : (Mask{1} << n) - 1; }

// Canonical order on subsets: cardinality first, then numeric value.
constexpr bool mask_less(Mask a, Mask b) {
  const int ca = mask_count(a), cb = mask_count(b);
  return ca != cb ? ca < cb : a < b;
}

template <typename F>
void mask_for_each(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// "0,2,5"; the empty set prints as "-".
inline std::string mask_to_csv(Mask m) {
  if (m == 0) return "-";
  std::string out;
  mask_for_each(m, [&](int i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  });
  return out;
}

}  // namespace locustra
