#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusscat::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusscat::cli
