#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicyclic::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Writes the report to `out`, diagnostics to
// `err`, and returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicyclic::cli
