#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossdrop {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // precondition violation, bad input, failed check
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;  // a library invariant broke

/// Runs one command. `args[0]` is the program name. Everything the command
/// prints goes to `out`; errors produce one line on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossdrop
