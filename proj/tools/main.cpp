#include <iostream>
#include <string>
#include <vector>

#include "edp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  edp::CommandResult result = edp::run_command(args);
  std::cout << result.report;
  return result.exit_code;
}
