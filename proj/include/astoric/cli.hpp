#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace astoric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitUsage = 64;

/// Runs one subcommand. args excludes the program name. The JSON document
/// goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace astoric::cli
