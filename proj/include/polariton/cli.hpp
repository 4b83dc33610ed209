// Command-line front end. `run` is the whole program minus process setup, so
// tests drive it in-process with string streams.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 physical-regime
// warning (weak coupling, no lower-branch well).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polariton::cli {

inline constexpr const char* kToolName = "polariton";
inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRegime = 2;

/// `args` excludes the program name, e.g. {"thresholds", "--config", "run.cfg"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polariton::cli
