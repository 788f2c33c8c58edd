#ifndef OBOUND_CLI_HPP
#define OBOUND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace obound::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line (arguments after the program name) and returns
/// the exit code. Tables and results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace obound::cli

#endif // OBOUND_CLI_HPP
