#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `obi` invocation. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace obi::cli
