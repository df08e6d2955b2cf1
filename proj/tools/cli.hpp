#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heaplie::cli {

/// Exit codes: 0 success/equal, 1 violation/not equal, 2 malformed input,
/// 3 over budget, 4 hypothesis refused.
enum ExitCode : int { kOk = 0, kViolation = 1, kMalformed = 2, kBudget = 3, kHypothesis = 4 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heaplie::cli
