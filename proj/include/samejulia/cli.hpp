#pragma once

#include <iosfwd>

namespace samejulia::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 2, kNumericError = 3 };

/// Parses argv, runs one subcommand and writes a single JSON document to
/// `out` (help text goes to `out` as plain text). Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace samejulia::cli
