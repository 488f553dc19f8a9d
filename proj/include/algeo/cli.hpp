#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algeo {

// Runs one CLI invocation. Exit codes: 0 success, 2 input error (with a
// one-line diagnostic naming file and line where known), 3 cap exceeded
// (naming the violated cap), 1 internal error. Output is deterministic:
// a pure function of the input files and flags.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algeo
