#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htau::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 invalid input or
/// any library error (reported as one JSON object on `err`).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace htau::cli
