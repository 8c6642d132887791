#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twred::cli {

/// Runs one command line (args[0] is the program name). Returns the exit
/// code: 0 ok, 1 usage, 2 parse error, 3 precondition, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twred::cli
