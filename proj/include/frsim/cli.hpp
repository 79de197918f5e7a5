#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frsim {

// Runs one CLI invocation; args[0] is the program name. Returns 0 on
// success, 1 on usage errors and 2 on data or parse errors. On success and
// on data errors exactly one JSON document is written to `out`; diagnostics
// go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frsim
