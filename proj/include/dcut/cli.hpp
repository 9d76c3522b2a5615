#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcut {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitResourceLimit = 2;

/// Runs one command. `args` excludes the program name. Decision commands
/// print "YES" or "NO" as their first line on `out`; errors go to `err` as
/// a single "error: ..." line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcut
