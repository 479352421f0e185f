#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordbracket::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kInternalError = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace chordbracket::cli
