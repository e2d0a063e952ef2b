#pragma once

#include <string>

namespace xxzge::testsupport {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the scanner binary (path baked in via XXZGE_CLI_PATH) with the given
// argument string, capturing exit code, stdout and stderr.
CliResult run_cli(const std::string& args);

std::string slurp(const std::string& path);

// Unique scratch-file path under the system temp directory.
std::string temp_path(const std::string& tag);

}  // namespace xxzge::testsupport
