#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qschur::cli {

/// Run the command line given argv-style arguments (without the program
/// name), writing JSON (or pretty text) to `out` and diagnostics to `err`.
/// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschur::cli
