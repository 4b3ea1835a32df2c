#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iterlog {

// Runs the command line `iterlog args...` and returns the exit status:
// 0 success, 1 failed check or mismatch, 2 bad flags or unusable input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iterlog
