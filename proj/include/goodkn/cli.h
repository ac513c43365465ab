#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goodkn {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;       // unrealizable input or failed claim
inline constexpr int kExitUsage = 2;        // bad flags or unreadable input
inline constexpr int kExitInterrupted = 3;  // census stopped early; resumable

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goodkn
