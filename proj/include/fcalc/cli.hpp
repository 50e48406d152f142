#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcalc::cli {

enum class Format { Text, Json, Latex };

/// Rendered command output.
struct OutputDoc {
  Format format = Format::Text;
  std::string payload;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcalc::cli
