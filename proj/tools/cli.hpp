#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extrainv::cli {

inline constexpr int kExitInvariant = 0;
inline constexpr int kExitNotInvariant = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line (without the program name). Primary output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extrainv::cli
