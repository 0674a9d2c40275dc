#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperqueens::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,        // a decision query came back negative or absent
  kInvalidArgument = 2,
  kResourceCap = 3,     // cell cap, overflow, or node budget without optimality
};

// Runs one command. args excludes the program name. The report goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperqueens::cli
