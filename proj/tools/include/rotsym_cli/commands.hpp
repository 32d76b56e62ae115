#pragma once

#include <ostream>

namespace rotsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and dispatches one subcommand. Never throws; every error is
/// reported on `err` and mapped to an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rotsym::cli
