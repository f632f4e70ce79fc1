#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locustra/space.hpp"

namespace locustra {

// Space text format:
//   space n=<N>
//   open <comma-separated point indices>      (the empty open is "open -")
// With complete_family the loader closes the family under finite unions
// and intersections (adding the empty and full sets); otherwise a
// non-closed family is a load error naming the missing set.
FiniteSpace parse_space(const std::string& text, bool complete_family = false);
std::string write_space(const FiniteSpace& s);

// Lattice text format:
//   lattice n=<N>
//   cover <i> <j>                              (i covered by j)
// Duplicate covers and out-of-range indices are rejected.
struct LatticeFile {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
};
LatticeFile parse_lattice_file(const std::string& text);

// Parse and build in one step: covers -> poset -> lattice -> frame.
FiniteFrame parse_lattice(const std::string& text);

std::string write_lattice(const FinitePoset& order);
inline std::string write_lattice(const FiniteFrame& f) { return write_lattice(f.order()); }

// Canonical single-line form: newlines become ';'.
std::string one_line(std::string_view text);

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

}  // namespace locustra
