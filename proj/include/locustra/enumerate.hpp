#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locustra/space.hpp"

namespace locustra {

// Exhaustive generation is capped where the counts explode; the next size
// up is reachable only through seeded uniform sampling.
inline constexpr int kMaxEnumeratedSpacePoints = 4;
inline constexpr int kMaxSampledSpacePoints = 5;
inline constexpr int kMaxEnumeratedPosetSize = 5;
inline constexpr int kMaxSampledPosetSize = 6;

// All topologies on n labeled points (all preorders, rendered as their
// families of up-closed sets), or only the T0 ones (posets). Backtracks
// over minimal-neighborhood assignments. Throws CapExceeded above the
// enumeration cap.
std::vector<FiniteSpace> enumerate_topologies(int n, bool t0_only = false);

// count distinct topologies drawn uniformly over all topologies on n
// labeled points (rejection sampling of random relations). Deterministic
// for a fixed seed.
std::vector<FiniteSpace> sample_topologies(int n, int count, std::uint64_t seed,
                                           bool t0_only = false);

// All labeled posets on n elements, in backtracking order.
std::vector<FinitePoset> enumerate_posets(int n);

struct FrameInstance {
  FiniteFrame frame;
  std::string provenance;
};

// Down-set lattices of every labeled poset on at most max_poset_size
// elements, each validated as a frame, plus hand-registered chains
// (2..9 elements) and Boolean cubes (dimension 0..5). Exact duplicates
// are dropped.
std::vector<FrameInstance> enumerate_frames(int max_poset_size);

// count distinct frames from posets of exactly poset_size elements drawn
// uniformly at random.
std::vector<FrameInstance> sample_frames(int poset_size, int count, std::uint64_t seed);

}  // namespace locustra
