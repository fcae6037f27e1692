#ifndef MONSCHED_CLI_HPP
#define MONSCHED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monsched {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitRefused = 3;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monsched

#endif  // MONSCHED_CLI_HPP
