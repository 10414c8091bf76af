#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bettikit::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kInputError = 3,
  kResourceCap = 4,
};

/// Runs one command line (without the program name) against the given
/// streams and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bettikit::cli
