#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locustra {

// Exit codes: 0 success, 1 property failure (suite counterexamples, or
// any failed check under --strict), 2 parse/input error, 3 cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace locustra
