#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tabjson::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kShapeError = 2,
  kRoundTripMismatch = 3,
  kLintFindings = 4,
  kUsage = 64,
};

/// Runs one invocation. `args` excludes the program name. stdin, stdout and
/// stderr are passed in so the whole tool can be driven from tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tabjson::cli
