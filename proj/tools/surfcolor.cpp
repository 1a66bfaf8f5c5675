#include <iostream>

#include "surfcolor/cli.hpp"
#include "surfcolor/io.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  auto result = surfcolor::cli::run(args);
  if (!result.payload.empty()) {
    if (result.output_path.empty()) {
      std::cout << result.payload;
    } else {
      try {
        surfcolor::write_text_file(result.output_path, result.payload);
      } catch (const std::exception& e) {
        result.status = surfcolor::cli::Status::kError;
        result.diagnostics.push_back({"error", e.what()});
      }
    }
  }
  std::cerr << result.render_diagnostics();
  return result.exit_code();
}
