#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspace::cli {

/// Run one CLI invocation (argv without the program name). Returns the
/// process exit code: 0 success / all checks passed, 1 verification
/// failure, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qspace::cli
