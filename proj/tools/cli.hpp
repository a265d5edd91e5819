#ifndef JZB_TOOLS_CLI_HPP
#define JZB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jzb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Nothing is written
/// to `out` when the exit code is kExitUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jzb::cli

#endif  // JZB_TOOLS_CLI_HPP
