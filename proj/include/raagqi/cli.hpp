#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raagqi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotQi = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raagqi
