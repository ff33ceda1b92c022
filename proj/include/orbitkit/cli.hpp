#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool. `args` excludes the program name. Writes one
/// JSON document (or plain text with --out text) to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on a verification mismatch or failed
/// computation, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitkit
