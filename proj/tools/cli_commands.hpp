#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tbern::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

// Runs the command line given without the program name; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tbern::cli
