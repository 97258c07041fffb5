#pragma once

#include <ostream>

namespace assoc::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitResource = 69;

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace assoc::cli
