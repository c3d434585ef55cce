#include <iostream>

#include "cyclosc/cli.hpp"

int main(int argc, char** argv) {
  using namespace cyclosc::cli;
  try {
    const auto config = parse_command_line(argc, argv);
    if (!config) return kExitOk;
    const RunResult result = run(*config);
    if (result.exit_code == kExitUsage) {
      std::cerr << result.output;
    } else if (config->output.empty()) {
      std::cout << result.output;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
