#include <iostream>
#include <string>
#include <vector>

#include "reesag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  reesag::CommandResult result = reesag::run_cli(args);
  if (!result.out.empty()) std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err;
  return result.exit_code;
}
