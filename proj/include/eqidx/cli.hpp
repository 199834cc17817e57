#pragma once

// Command-line front end.  run() is the whole program minus process setup so
// tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace eqidx::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqidx::cli
