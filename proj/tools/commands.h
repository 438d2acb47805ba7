#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace deltaclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// Entry point of the `deltaclique` tool. `args` excludes the program name.
// Normal output goes to `out`, reports and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace deltaclique::cli
