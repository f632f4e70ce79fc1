#include <doctest.h>

#include <vector>

#include "locustra/enumerate.hpp"
#include "locustra/errors.hpp"
#include "locustra/space.hpp"

#include "oracles.hpp"

using namespace locustra;

namespace {

FiniteSpace sierpinski() { return FiniteSpace::from_opens(2, {0b00, 0b10, 0b11}); }
FiniteSpace discrete2() { return FiniteSpace::from_opens(2, {0b00, 0b01, 0b10, 0b11}); }
FiniteSpace indiscrete2() { return FiniteSpace::from_opens(2, {0b00, 0b11}); }

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0b10, 0b11}), Error);        // no empty open
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0b00, 0b10}), Error);        // no full open
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0b00, 0b10, 0b10}), Error);  // duplicate
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0b00, 0b01, 0b10, 0b11, 0b100}), Error);
  // union/intersection closure: {0},{1} without {0,1} can't happen with
  // the full set required, but a 3-point family can miss a union
  CHECK_THROWS_AS(FiniteSpace::from_opens(3, {0b000, 0b001, 0b010, 0b111}), Error);
  // the empty space has exactly one open
  const FiniteSpace empty = FiniteSpace::from_opens(0, {0});
  CHECK(empty.points() == 0);
  CHECK(empty.opens().size() == 1);
}

TEST_CASE("closure golden values") {
  const FiniteSpace s = sierpinski();
  CHECK(closure(s, 0) == 0);
  CHECK(closure(s, 0b10) == 0b11);  // {1} closes to everything
  CHECK(closure(s, 0b01) == 0b01);  // {0} is closed
  CHECK(closure(discrete2(), 0b01) == 0b01);
}

TEST_CASE("exterior golden values") {
  const FiniteSpace s = sierpinski();
  CHECK(exterior(s, 0) == 0b11);
  CHECK(exterior(s, 0b11) == 0);
  CHECK(exterior(s, 0b10) == 0);
  CHECK_THROWS_AS(exterior(s, 0b01), NotOpen);
}

TEST_CASE("specialization convention") {
  const FiniteSpace s = sierpinski();
  const Specialization sp = specialization(s);
  CHECK(sp.leq(0, 1));   // 0 lies in the closure of {1}
  CHECK(!sp.leq(1, 0));
  const Specialization d = specialization(discrete2());
  CHECK(d.above[0] == 0b01);
  CHECK(d.above[1] == 0b10);
  const Specialization i = specialization(indiscrete2());
  CHECK(i.above[0] == 0b11);
  CHECK(i.above[1] == 0b11);
}

TEST_CASE("separation verdicts on the three classics") {
  const FiniteSpace s = sierpinski();
  CHECK(is_t0(s).ok);
  const Verdict t1 = is_t1(s);
  CHECK(!t1.ok);
  CHECK(t1.witness == "point 1");
  CHECK(!is_preregular(s).ok);
  CHECK(!is_hausdorff(s).ok);
  CHECK(is_sober(s).ok);

  const FiniteSpace d = discrete2();
  CHECK(is_t0(d).ok);
  CHECK(is_t1(d).ok);
  CHECK(is_preregular(d).ok);
  CHECK(is_hausdorff(d).ok);
  CHECK(is_sober(d).ok);

  const FiniteSpace i = indiscrete2();
  const Verdict t0 = is_t0(i);
  CHECK(!t0.ok);
  CHECK(t0.witness == "points 0,1");
  CHECK(is_preregular(i).ok);  // vacuous: no distinguishable pairs
  CHECK(!is_sober(i).ok);
}

TEST_CASE("points_to_primes golden values") {
  CHECK(points_to_primes(sierpinski()) == std::vector<Mask>{0b10, 0b00});
  CHECK(points_to_primes(discrete2()) == std::vector<Mask>{0b10, 0b01});
  CHECK(points_to_primes(indiscrete2()) == std::vector<Mask>{0b00, 0b00});
}

TEST_CASE("neighborhood filters") {
  const FiniteSpace s = sierpinski();
  const NeighborhoodFilter at1 = neighborhood_filter(s, 1);
  CHECK(at1.open_indices == std::vector<int>{1, 2});  // {1} and the full set
  const NeighborhoodFilter at0 = neighborhood_filter(s, 0);
  CHECK(at0.open_indices == std::vector<int>{2});
  CHECK_THROWS_AS(neighborhood_filter(s, 2), Error);
  const NeighborhoodFilter ind = neighborhood_filter(indiscrete2(), 0);
  CHECK(ind.open_indices == std::vector<int>{1});
}

TEST_CASE("open set frames of the classics") {
  const OpenSetFrame chain = open_set_frame(sierpinski());
  CHECK(chain.frame.size() == 3);
  CHECK(chain.frame.top() == 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(chain.frame.meet(a, b) == std::min(a, b));

  const OpenSetFrame square = open_set_frame(discrete2());
  CHECK(square.frame.size() == 4);
  CHECK(square.frame.meet(1, 2) == 0);
  CHECK(square.frame.join(1, 2) == 3);

  const OpenSetFrame point = open_set_frame(FiniteSpace::from_opens(1, {0b0, 0b1}));
  CHECK(point.frame.size() == 2);

  const OpenSetFrame trivial = open_set_frame(FiniteSpace::from_opens(0, {0}));
  CHECK(trivial.frame.size() == 1);
  CHECK(trivial.frame.bottom() == trivial.frame.top());
}

TEST_CASE("properties over every small space") {
  for (int n = 0; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const OpenSetFrame osf = open_set_frame(s);
      // exterior is the pseudo-complement under the correspondence
      for (std::size_t i = 0; i < osf.open_of.size(); ++i) {
        const int e = osf.frame.neg(static_cast<int>(i));
        CHECK(exterior(s, osf.open_of[i]) == osf.open_of[e]);
      }
      // hausdorff iff T0 and preregular
      CHECK(is_hausdorff(s).ok == (is_t0(s).ok && is_preregular(s).ok));
      // finite spaces: sober iff T0 (the sober check itself is direct)
      CHECK(is_sober(s).ok == is_t0(s).ok);
      // p(x) is prime, and neighborhood sets coincide iff closures do
      const std::vector<Mask> p = points_to_primes(s);
      for (int x = 0; x < n; ++x) {
        CHECK(oracles::prime_by_definition(osf.frame, osf.element_of(p[x])));
        for (int y = 0; y < n; ++y) {
          const bool same_nbhd =
              neighborhood_filter(s, x).open_indices == neighborhood_filter(s, y).open_indices;
          CHECK(same_nbhd == (closure(s, mask_bit(x)) == closure(s, mask_bit(y))));
        }
      }
      // p is injective on T0 spaces
      if (is_t0(s).ok)
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y) CHECK(p[x] != p[y]);
    }
  }
}

TEST_CASE("witnesses are the least failing pairs") {
  // three points, opens make 1 and 2 indistinguishable
  const FiniteSpace s = FiniteSpace::from_opens(3, {0b000, 0b001, 0b111});
  const Verdict t0 = is_t0(s);
  CHECK(!t0.ok);
  CHECK(t0.witness == "points 1,2");
  const Verdict h = is_hausdorff(s);
  CHECK(h.witness == "points 0,1");
}

TEST_CASE("sober witness names the doubled generic point") {
  const Verdict v = is_sober(indiscrete2());
  CHECK(!v.ok);
  CHECK(v.witness == "closed {0,1} generic-points 2");
}
