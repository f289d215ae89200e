#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipow {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `bipow` tool. `args` excludes the program name.
/// A file argument of "-" means `in` for inputs and `out` for outputs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bipow
