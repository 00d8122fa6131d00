#include <iostream>

#include "critgroup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return critgroup::cli::run(args, std::cin, std::cout, std::cerr);
}
