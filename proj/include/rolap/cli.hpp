#pragma once

#include <ostream>

namespace rolap::cli {

enum ExitCode : int { ok = 0, falsified = 1, usage = 2, capacity = 3 };

/// Runs one command line.  Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rolap::cli
