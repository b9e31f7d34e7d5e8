#pragma once

#include <iosfwd>

namespace elsurf {

/// Full command-line front end; parses argv and writes reports to `out`,
/// diagnostics to `err`. Returns the process exit code: 0 on success, 1 on
/// invalid input, 2 on an internal invariant violation.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace elsurf
