#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinv::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kSuccess = 0,
    kError = 1,
    kViolations = 2, ///< report written, but a checked property failed
};

/// Runs one command line (without the program name). Reports go to the
/// --out file when given, otherwise to `out`; summaries and diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Name of the environment variable consulted when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "COINV_CACHE_DIR";

} // namespace coinv::cli
