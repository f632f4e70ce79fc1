#pragma once

#include <stdexcept>
#include <string>

namespace locustra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The cover relation has a directed cycle (equivalently, antisymmetry
// would fail after taking the closure).
struct CycleDetected : Error {
  using Error::Error;
};

struct NotALattice : Error {
  int a, b;
  bool missing_meet;  // otherwise the join is missing
  NotALattice(int a_, int b_, bool missing_meet_)
      : Error("not a lattice: pair (" + std::to_string(a_) + "," + std::to_string(b_) +
              ") has no " + (missing_meet_ ? "meet" : "join")),
        a(a_),
        b(b_),
        missing_meet(missing_meet_) {}
};

struct NotDistributive : Error {
  int a, b, c;
  NotDistributive(int a_, int b_, int c_)
      : Error("not distributive at triple (" + std::to_string(a_) + "," + std::to_string(b_) +
              "," + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct NotOpen : Error {
  using Error::Error;
};

struct UnknownElement : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// An instance exceeds a structural limit (carrier width, Scott open cap).
struct InstanceTooLarge : Error {
  using Error::Error;
};

// A generator was asked for more than its enumeration cap allows.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace locustra
