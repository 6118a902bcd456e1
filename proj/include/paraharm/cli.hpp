#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paraharm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err` (help text goes to `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paraharm::cli
