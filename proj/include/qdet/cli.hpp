#pragma once

#include <string>
#include <vector>

namespace qdet::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2 };

struct Outcome {
    int exit_code = kOk;
    std::string out;  // JSON document (or help text)
    std::string err;  // diagnostics
};

// Runs one command line; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace qdet::cli
