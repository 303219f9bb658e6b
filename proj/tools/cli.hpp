#pragma once

#include <iosfwd>

namespace dioph::cli {

enum ExitCode : int { ok = 0, criterion_failed = 1, usage = 2, budget = 3 };

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
