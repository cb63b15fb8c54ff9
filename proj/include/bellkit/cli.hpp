#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. JSON goes to `out`, human-readable summaries
/// and usage text to `err`. Returns the process exit code: 0 on success,
/// 2 on domain errors (with a machine-readable error object on `out`),
/// 64 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellkit::cli
