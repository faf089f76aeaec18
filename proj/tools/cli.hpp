#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace automorph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Runs one invocation. args excludes the program name. Machine output goes
/// to `out` unless --out redirects it to files; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace automorph::cli
