#include <doctest.h>

#include <vector>

#include "locustra/errors.hpp"
#include "locustra/lattice.hpp"

#include "oracles.hpp"

using namespace locustra;

namespace {

FinitePoset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return poset_from_covers(n, covers);
}

}  // namespace

TEST_CASE("a chain is a lattice with min and max") {
  const FiniteLattice l = lattice_from_poset(chain(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(l.meet(a, b) == std::min(a, b));
      CHECK(l.join(a, b) == std::max(a, b));
    }
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 2);
}

TEST_CASE("a two-element antichain is not a lattice") {
  const FinitePoset p = poset_from_covers(2, {});
  CHECK_THROWS_AS(lattice_from_poset(p), NotALattice);
  try {
    lattice_from_poset(p);
  } catch (const NotALattice& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 1);
    CHECK(!e.missing_meet);  // no upper bound
  }
}

TEST_CASE("diamond bounds are forced by the order") {
  const std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const FiniteLattice l = lattice_from_poset(poset_from_covers(4, covers));
  CHECK(l.meet(1, 2) == 0);
  CHECK(l.join(1, 2) == 3);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 3);
}

TEST_CASE("empty carrier has no lattice") {
  CHECK_THROWS_AS(lattice_from_poset(poset_from_covers(0, {})), Error);
}

TEST_CASE("tables always agree with bounds recomputed from the order") {
  // Every poset on <= 4 elements that happens to be a lattice.
  for (int n = 1; n <= 4; ++n) {
    std::vector<Mask> rows(n);
    const Mask full = mask_all(n * n <= 16 ? n * n : 16);
    (void)full;
    // brute force all reflexive relations via recursion-free encoding:
    // iterate the n*(n-1) off-diagonal bits.
    const int bits = n * (n - 1);
    for (long enc = 0; enc < (1L << bits); ++enc) {
      long e = enc;
      bool valid = true;
      for (int i = 0; i < n; ++i) rows[i] = mask_bit(i);
      for (int i = 0; i < n && valid; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if (e & 1) rows[i] |= mask_bit(j);
          e >>= 1;
        }
      // keep only posets
      for (int i = 0; i < n && valid; ++i) {
        mask_for_each(rows[i] & ~mask_bit(i), [&](int j) {
          if (mask_test(rows[j], i)) valid = false;
          if (!mask_subset(rows[j], rows[i])) valid = false;
        });
      }
      if (!valid) continue;
      const FinitePoset p = FinitePoset::from_up_rows(rows);
      try {
        const FiniteLattice l = lattice_from_poset(p);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            CHECK(l.meet(a, b) == oracles::glb_from_order(p, a, b));
            CHECK(l.join(a, b) == oracles::lub_from_order(p, a, b));
          }
      } catch (const NotALattice& e) {
        // the named pair must genuinely miss that bound
        if (e.missing_meet)
          CHECK(oracles::glb_from_order(p, e.a, e.b) == -1);
        else
          CHECK(oracles::lub_from_order(p, e.a, e.b) == -1);
      }
    }
  }
}

TEST_CASE("from_tables rejects tables that disagree with the order") {
  const FinitePoset p = chain(3);
  const FiniteLattice good = lattice_from_poset(p);
  std::vector<int> meet(9), join(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      meet[a * 3 + b] = std::min(a, b);
      join[a * 3 + b] = std::max(a, b);
    }
  CHECK_NOTHROW(FiniteLattice::from_tables(p, meet, join, 0, 2));
  std::vector<int> bad = meet;
  bad[1 * 3 + 2] = 0;  // min(1,2) is 1, not 0
  CHECK_THROWS_AS(FiniteLattice::from_tables(p, bad, join, 0, 2), Error);
  CHECK(good.meet(1, 2) == 1);
}

TEST_CASE("set families give inclusion lattices") {
  // opens of the Sierpinski space: {} < {1} < {0,1}
  const std::vector<Mask> family{0b00, 0b10, 0b11};
  const FiniteLattice l = lattice_from_set_family(family);
  CHECK(l.size() == 3);
  CHECK(l.meet(1, 2) == 1);
  CHECK(l.join(0, 1) == 1);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 2);

  const std::vector<Mask> not_closed{0b00, 0b01, 0b10};  // missing the union
  CHECK_THROWS_AS(lattice_from_set_family(not_closed), Error);
  const std::vector<Mask> unsorted{0b11, 0b00, 0b10};
  CHECK_THROWS_AS(lattice_from_set_family(unsorted), Error);
}
