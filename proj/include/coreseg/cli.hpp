#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coreseg::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kProcessing = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coreseg::cli
