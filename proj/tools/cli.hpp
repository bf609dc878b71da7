#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdseq::cli {

enum ExitCode : int {
    kOk = 0,
    kFalsified = 1,
    kUsage = 2,
};

/// Runs one command line (without the program name). Output and diagnostics
/// go to the given streams; nothing touches the process state.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdseq::cli
