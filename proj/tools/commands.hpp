#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cremona::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0
/// success, 1 domain error or rejected trace, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
