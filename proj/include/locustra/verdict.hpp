#pragma once

#include <string>
#include <utility>

namespace locustra {

// Outcome of a decidable check. Failing verdicts carry a deterministic
// witness (the lexicographically least one the check encounters).
struct Verdict {
  bool ok = true;
  std::string witness;  // empty iff ok

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

inline std::string to_string(const Verdict& v) {
  return v.ok ? "pass" : "fail(witness " + v.witness + ")";
}

}  // namespace locustra
