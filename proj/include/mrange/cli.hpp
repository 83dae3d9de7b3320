#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrange::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageOrParse = 1,
  kPrecondition = 2,
  kInternal = 3,
};

struct CliResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command. args excludes the program name. stdin is read only
/// when --matrix is "-".
CliResult run(const std::vector<std::string>& args, std::istream& stdin_stream);

}  // namespace mrange::cli
