#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoconvex::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 when `verify` finds a violation, 2 on usage, parse or
/// evaluation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoconvex::cli
