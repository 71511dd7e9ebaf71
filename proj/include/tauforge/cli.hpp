#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tauforge::cli {

/// Exit codes: 0 success or all checks pass, 1 a verification failed, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (args excludes the program name) writing results to out
/// and one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tauforge::cli
