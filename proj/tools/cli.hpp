#ifndef HYPERSET_TOOLS_CLI_HPP
#define HYPERSET_TOOLS_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace hyperset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not bisimilar, unstratified, not constructible
inline constexpr int kExitUsage = 2;     // bad flags, unparsable input, rejected values

// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperset::cli

#endif  // HYPERSET_TOOLS_CLI_HPP
