#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pspin::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the pspin command line. `args` excludes the program name. Reports go
/// to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pspin::cli
