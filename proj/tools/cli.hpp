#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hencky::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2, kVerifyFailure = 3 };

/// Runs one invocation. `args` excludes the program name. The report goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hencky::cli
