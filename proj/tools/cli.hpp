#pragma once

#include <iosfwd>

namespace pdtrank::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line. Returns 0 on success, 1 when a check fails, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdtrank::cli
