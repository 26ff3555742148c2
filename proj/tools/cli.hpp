#ifndef STABLECONS_TOOLS_CLI_HPP
#define STABLECONS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stablecons::cli {

// Exit codes.
inline constexpr int kAffirmative = 0;  // success, consequence, stable
inline constexpr int kNegative = 1;     // countermodel, unstable, disagreement
inline constexpr int kUsageError = 2;   // bad arguments, parse errors, malformed input
inline constexpr int kBudgetError = 3;  // budget exceeded or search bound exhausted

/// Runs one subcommand. `args` excludes the program name. The JSON result
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablecons::cli

#endif  // STABLECONS_TOOLS_CLI_HPP
