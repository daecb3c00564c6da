#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlace::cli {

/// Exit codes: 0 all checks passed, 1 at least one violation, 2 usage or
/// configuration error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (args[0] is the program name) writing normal
/// output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlace::cli
