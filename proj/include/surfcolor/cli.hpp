#pragma once

// Command-line front end. run() does all the work and never touches stdout, so
// it can be driven from tests; the binary only prints the result.
//
// Exit codes: 0 success, 1 no coloring exists (or a checked coloring is
// invalid), 2 error.

#include <string>
#include <vector>

namespace surfcolor::cli {

enum class Status { kOk = 0, kUnsat = 1, kError = 2 };

struct Diagnostic {
  std::string level;  // "info" or "error"
  std::string message;
};

struct CommandResult {
  Status status = Status::kOk;
  /// Text for stdout, or for the file named by --output.
  std::string payload;
  std::vector<Diagnostic> diagnostics;
  /// Set by --json: diagnostics render as JSON lines.
  bool json = false;
  /// Set by --output.
  std::string output_path;

  int exit_code() const { return static_cast<int>(status); }
  std::string render_diagnostics() const;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace surfcolor::cli
