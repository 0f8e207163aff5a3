#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ofb::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splices key=value lines from a config file into args: each key becomes
/// --key value after the subcommand unless --key is already given. "true"
/// yields a bare flag, "false" drops it. Throws std::runtime_error on a
/// malformed line or unreadable file.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& path);

}  // namespace ofb::cli
