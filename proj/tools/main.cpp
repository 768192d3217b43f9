#include <iostream>

#include "abel_cycles/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abel_cycles::cli::run(args, std::cout, std::cerr);
}
