#pragma once

// The amzv command-line interface as a library function, so tests can drive it
// without spawning processes.

#include <ostream>
#include <string>
#include <vector>

namespace amzv::cli {

enum ExitCode : int { kOk = 0, kComputeError = 1, kUsageError = 2, kVerifyFailed = 3 };

/// Runs one command. args excludes the program name. The environment variable
/// AMZV_Q supplies q when no field flag is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amzv::cli
