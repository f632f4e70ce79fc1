#pragma once

#include <span>
#include <vector>

#include "locustra/scott.hpp"

namespace locustra {

// All p != top with a /\ b <= p implying a <= p or b <= p, ascending.
std::vector<int> primes(const FiniteFrame& f);

// Space of prime elements, topologized by the sets {x : a not<= x}. The
// space's points are positions into the prime list; distinct elements may
// induce the same open, so the open family is deduplicated while
// open_of_element keeps the full map.
struct SpectrumSpace {
  std::vector<int> primes;
  FiniteSpace space;
  std::vector<Mask> open_of_element;  // a -> {positions i : a not<= primes[i]}
};
SpectrumSpace spectrum(const FiniteFrame& f);

// neg a \/ b = top.
bool well_inside(const FiniteFrame& f, int a, int b);

// The prime inclusion is continuous for the Scott topology: the prime
// part of every Scott open must be an open of the spectrum.
Verdict is_scott_locale(const FiniteFrame& f,
                        std::size_t max_opens = kDefaultMaxScottOpens);

// Variant taking precomputed structures, for callers that already hold
// them.
Verdict scott_locale_check(const FiniteFrame& f, std::span<const Mask> scott_opens,
                           const SpectrumSpace& sp);

// Eq. (R1) quantification range: the default follows the primes-only
// reading; all_elements is the experiment variant.
enum class R1Scope { primes, all_elements };

// Every prime (or element, under all_elements) is the join of the
// elements well inside it.
Verdict is_preregular_locale(const FiniteFrame& f, R1Scope scope = R1Scope::primes);

}  // namespace locustra
