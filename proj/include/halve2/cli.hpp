#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halve2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs one invocation. `args` excludes the program name. `in` is only read by
/// the `verify` subcommand.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace halve2::cli
