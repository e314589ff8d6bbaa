#include <iostream>
#include <string>
#include <vector>

#include "ptdirac_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptdirac::cli::run(args, std::cout, std::cerr);
}
