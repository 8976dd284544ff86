#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsum::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsum::cli
