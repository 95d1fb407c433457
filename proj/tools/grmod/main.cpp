#include <iostream>

#include "grmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grmod::run_cli(args, std::cout, std::cerr);
}
