#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitNoFit = 3;

inline constexpr unsigned kOracleGuard = 10;
inline constexpr unsigned kEnumeratorGuard = 20;
inline constexpr unsigned kPgfGuard = 500;

/// Runs one invocation; args[0] is the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amp::cli
