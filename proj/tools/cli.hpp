#ifndef POLYTANGENT_TOOLS_CLI_HPP
#define POLYTANGENT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polytangent::cli {

// Exit codes are a stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotSeparable = 2;
inline constexpr int kExitPreconditionUncertain = 3;
inline constexpr int kExitBoundViolation = 4;

inline constexpr const char* kJsonSchema = "polytangent/tangents/v1";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytangent::cli

#endif  // POLYTANGENT_TOOLS_CLI_HPP
