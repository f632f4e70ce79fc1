#include <doctest.h>

#include "locustra/errors.hpp"
#include "locustra/textio.hpp"

using namespace locustra;

TEST_CASE("space files round-trip through the canonical writer") {
  const std::string text = "space n=2\nopen -\nopen 1\nopen 0,1\n";
  const FiniteSpace s = parse_space(text);
  CHECK(s.points() == 2);
  CHECK(write_space(s) == text);
  // loader accepts any order; the writer canonicalizes
  const FiniteSpace shuffled = parse_space("space n=2\nopen 0,1\nopen -\nopen 1\n");
  CHECK(write_space(shuffled) == text);
}

TEST_CASE("space parse errors carry line numbers and tokens") {
  try {
    parse_space("space n=2\nopen 0,9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("9") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_space(""), ParseError);
  CHECK_THROWS_AS(parse_space("lattice n=2\n"), ParseError);
  CHECK_THROWS_AS(parse_space("space n=2\nopen 0,0\n"), ParseError);    // duplicate point
  CHECK_THROWS_AS(parse_space("space n=2\nopen -\nopen -\n"), ParseError);  // duplicate open
  CHECK_THROWS_AS(parse_space("space n=2\nopens 1\n"), ParseError);
  CHECK_THROWS_AS(parse_space("space n=x\n"), ParseError);
  CHECK_THROWS_AS(parse_space("space n=65\n"), ParseError);
}

TEST_CASE("non-closed families name the missing set") {
  const std::string text = "space n=3\nopen -\nopen 0\nopen 1\nopen 0,1,2\n";
  try {
    parse_space(text);
    FAIL("expected a closure error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
  }
  // with completion the same family loads
  const FiniteSpace s = parse_space(text, true);
  CHECK(s.opens().size() == 5);
  CHECK(s.is_open(0b011));
}

TEST_CASE("completion adds the empty and full sets") {
  const FiniteSpace s = parse_space("space n=2\nopen 0\n", true);
  CHECK(s.opens().size() == 3);
  CHECK(s.is_open(0));
  CHECK(s.is_open(0b11));
}

TEST_CASE("lattice files round-trip") {
  const std::string text = "lattice n=3\ncover 0 1\ncover 1 2\n";
  const FiniteFrame f = parse_lattice(text);
  CHECK(f.size() == 3);
  CHECK(f.top() == 2);
  CHECK(write_lattice(f) == text);
}

TEST_CASE("lattice parse errors") {
  CHECK_THROWS_AS(parse_lattice_file("lattice n=2\ncover 0 1\ncover 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_file("lattice n=2\ncover 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_file("lattice n=2\ncover 0\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_file("space n=2\n"), ParseError);
  // semantic failures surface as their own types
  CHECK_THROWS_AS(parse_lattice("lattice n=2\ncover 0 1\ncover 1 0\n"), CycleDetected);
  CHECK_THROWS_AS(parse_lattice("lattice n=2\n"), NotALattice);
}

TEST_CASE("comments and blank lines are tolerated") {
  const FiniteFrame f = parse_lattice("# a chain\nlattice n=2\n\ncover 0 1\n");
  CHECK(f.size() == 2);
}

TEST_CASE("one_line flattens canonical text") {
  CHECK(one_line("space n=2\nopen -\n") == "space n=2;open -");
  CHECK(one_line("a") == "a");
}

TEST_CASE("hashing is pinned") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(hash_hex(0) == "0000000000000000");
  CHECK(hash_hex(0xabcdef) == "0000000000abcdef");
}
