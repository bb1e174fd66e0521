#ifndef HDRAN_TOOLS_COMMANDS_HPP
#define HDRAN_TOOLS_COMMANDS_HPP

namespace hdran::cli {

/// Exit codes: 0 success, 1 runtime or validation failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, char** argv);

}  // namespace hdran::cli

#endif  // HDRAN_TOOLS_COMMANDS_HPP
