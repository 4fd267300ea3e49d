#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depval::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInvalidInput = 2,
  kPartialFailure = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace depval::cli
