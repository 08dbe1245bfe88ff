#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrssp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,  // bad arguments or unparsable input
    kInfeasible = 2,  // total requirement exceeds total supply
    kOracleCap = 3,   // exact solver refused the job count
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrssp::cli
