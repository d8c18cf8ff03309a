#include <iostream>
#include <string>
#include <vector>

#include "mate/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mate::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
