#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aca::cli {

// Exit codes shared by every subcommand that reports a verdict.
inline constexpr int kInvertible = 0;
inline constexpr int kDiffMismatch = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNotInvertible = 3;

/// Entry point behind the `aca` binary; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aca::cli
