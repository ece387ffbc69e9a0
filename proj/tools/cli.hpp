#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scmorph::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // I/O or validation error
inline constexpr int kUsage = 2;
inline constexpr int kCheckFailed = 3;

/// Runs one command line (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scmorph::cli
