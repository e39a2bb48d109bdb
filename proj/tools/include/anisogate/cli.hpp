#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anisogate::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kSynthesisFailure = 3;
inline constexpr int kContractViolation = 4;

/// Runs the tool on `args` (without the program name). Everything the tool
/// prints goes to `out` / `err`, so tests can drive it in-process.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace anisogate::cli
