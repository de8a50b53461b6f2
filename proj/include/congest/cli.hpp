#pragma once

#include <string>
#include <vector>

namespace congest {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command-line tool on the given arguments (without argv[0]).
/// Returns the process exit code: 0 on success, 1 for input/usage errors,
/// 2 for numeric failures.
int run(const std::vector<std::string>& args);

}  // namespace congest
