#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polypart::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitCheckFailed = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polypart::cli
