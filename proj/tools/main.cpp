#include <iostream>

#include "cogebra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cogebra::run_cli(args, std::cout, std::cerr);
}
